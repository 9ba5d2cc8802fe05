#include "noosphere/ncomp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "noosphere/lifeca.hpp"

namespace noosphere {

namespace {

std::string hex(Address a) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%05X", a);
  return buf;
}

void check_address(Address a) {
  if (a >= kAddressLimit) {
    throw Error(ErrorKind::kDomain, "address " + std::to_string(a) + " exceeds 19 bits");
  }
}

}  // namespace

DnaStrand encode_address(Address address) {
  check_address(address);
  Bits bits(kAddressBases);
  for (std::size_t i = 0; i < kAddressBases; ++i) {
    bits[i] = ((address >> (kAddressBases - 1 - i)) & 1u) != 0;
  }
  return binary_to_dna(bits);
}

Address decode_address(const DnaStrand& strand) {
  if (strand.size() < kAddressBases) {
    throw Error(ErrorKind::kDomain, "strand shorter than an address");
  }
  const Bits bits = dna_to_binary(strand.substr(0, kAddressBases));
  Address a = 0;
  for (bool b : bits) a = (a << 1) | (b ? 1u : 0u);
  return a;
}

DnaMemory::DnaMemory(AddressRange replication_segment) : segment_(replication_segment) {
  if (segment_.first > segment_.last || segment_.last >= kAddressLimit) {
    throw Error(ErrorKind::kDomain, "invalid replication segment");
  }
}

void DnaMemory::check_access(Address address, Access access) const {
  if (access == Access::kProtected && segment_.contains(address)) {
    throw Error(ErrorKind::kProtectedRegion,
                "address " + hex(address) + " lies in the replication segment");
  }
}

void DnaMemory::write(Address address, const Bits& payload, Access access) {
  if (payload.size() != kPayloadBases) {
    throw Error(ErrorKind::kWidthMismatch, "payload must be 96 bits, got " +
                                               std::to_string(payload.size()));
  }
  DnaStrand strand = encode_address(address);
  strand.append(binary_to_dna(payload));
  write_strand(strand, access);
}

void DnaMemory::write_strand(const DnaStrand& strand, Access access) {
  if (strand.size() != kStrandBases) {
    throw Error(ErrorKind::kWidthMismatch, "memory strands must have 115 bases, got " +
                                               std::to_string(strand.size()));
  }
  const Address address = decode_address(strand);
  check_access(address, access);
  strands_.insert_or_assign(address, strand);
}

const DnaStrand& DnaMemory::strand(Address address) const {
  const auto it = strands_.find(address);
  if (it == strands_.end()) {
    throw Error(ErrorKind::kMissingStrand, "no strand at address " + hex(address));
  }
  return it->second;
}

DnaStrand DnaMemory::payload(Address address) const {
  return strand(address).substr(kAddressBases, kPayloadBases);
}

Bits DnaMemory::read(Address address) const { return dna_to_binary(payload(address)); }

void DnaMemory::erase(Address address, Access access) {
  check_access(address, access);
  if (strands_.erase(address) == 0) {
    throw Error(ErrorKind::kMissingStrand, "no strand at address " + hex(address));
  }
}

std::vector<Address> DnaMemory::addresses() const {
  std::vector<Address> out;
  out.reserve(strands_.size());
  for (const auto& [a, s] : strands_) out.push_back(a);
  return out;
}

std::vector<SearchHit> DnaMemory::search(const DnaStrand& pattern) const {
  if (pattern.empty()) throw Error(ErrorKind::kDomain, "search pattern must not be empty");
  std::vector<SearchHit> hits;
  const auto& needle = pattern.bases();
  for (const auto& [address, strand] : strands_) {
    const auto payload_begin = strand.bases().begin() + kAddressBases;
    const auto payload_end = strand.bases().end();
    auto it = payload_begin;
    while (true) {
      it = std::search(it, payload_end, needle.begin(), needle.end());
      if (it == payload_end) break;
      hits.push_back({address, static_cast<std::size_t>(it - payload_begin)});
      ++it;
    }
  }
  return hits;
}

std::size_t DnaMemory::replication_strands() const {
  const auto lo = strands_.lower_bound(segment_.first);
  const auto hi = strands_.upper_bound(segment_.last);
  return static_cast<std::size_t>(std::distance(lo, hi));
}

NComputer::NComputer(MachineId id, DnaMemory memory,
                     const std::vector<std::string>& register_names, std::size_t register_width,
                     AluConfig alu)
    : id_(id), memory_(std::move(memory)), register_width_(register_width), alu_(alu) {
  if (register_names.size() < 2) {
    throw Error(ErrorKind::kDomain, "an N-computer needs at least two registers");
  }
  if (alu_.width == 0 || alu_.height == 0) {
    throw Error(ErrorKind::kDomain, "ALU grid dimensions must be positive");
  }
  if (register_width_ > alu_.capacity()) {
    throw Error(ErrorKind::kCapacity, "register width " + std::to_string(register_width_) +
                                          " exceeds ALU capacity " +
                                          std::to_string(alu_.capacity()));
  }
  for (const auto& name : register_names) {
    if (std::any_of(registers_.begin(), registers_.end(),
                    [&](const Register& r) { return r.name == name; })) {
      throw Error(ErrorKind::kDomain, "duplicate register " + name);
    }
    registers_.push_back({name, Bits(register_width_, false)});
  }
}

Register& NComputer::find(std::string_view name) {
  for (auto& r : registers_) {
    if (r.name == name) return r;
  }
  throw Error(ErrorKind::kUnknownRegister, "no register named " + std::string(name));
}

const Register& NComputer::find(std::string_view name) const {
  return const_cast<NComputer*>(this)->find(name);
}

const Bits& NComputer::reg(std::string_view name) const { return find(name).bits; }

void NComputer::set_register(std::string_view name, const Bits& bits) {
  Register& r = find(name);
  if (bits.size() != register_width_) {
    throw Error(ErrorKind::kWidthMismatch, "register " + r.name + " holds " +
                                               std::to_string(register_width_) + " bits, got " +
                                               std::to_string(bits.size()));
  }
  r.bits = bits;
}

Bits NComputer::alu_execute(std::string_view name) {
  Register& r = find(name);
  if (r.bits.size() > alu_.capacity()) {
    throw Error(ErrorKind::kCapacity, "register does not fit the ALU grid");
  }
  Grid grid = Grid::toroidal(alu_.width, alu_.height);
  const auto w = static_cast<std::int64_t>(alu_.width);
  for (std::size_t i = 0; i < r.bits.size(); ++i) {
    if (r.bits[i]) grid.set(static_cast<std::int64_t>(i) / w, static_cast<std::int64_t>(i) % w);
  }
  grid = run(grid, alu_.steps);
  for (std::size_t i = 0; i < r.bits.size(); ++i) {
    r.bits[i] = grid.alive(static_cast<std::int64_t>(i) / w, static_cast<std::int64_t>(i) % w);
  }
  return r.bits;
}

void NComputer::load_register(std::string_view name, Address address) {
  Register& r = find(name);
  if (register_width_ != kPayloadBases) {
    throw Error(ErrorKind::kWidthMismatch, "memory transfers need 96-bit registers");
  }
  r.bits = memory_.read(address);
}

void NComputer::store_register(std::string_view name, Address address, Access access) {
  const Register& r = find(name);
  if (register_width_ != kPayloadBases) {
    throw Error(ErrorKind::kWidthMismatch, "memory transfers need 96-bit registers");
  }
  memory_.write(address, r.bits, access);
}

NComputer NComputer::replicate(MachineId new_id) const {
  if (!alive_) {
    throw Error(ErrorKind::kDeadMachine, "machine " + std::to_string(id_) + " is shut down");
  }
  if (memory_.replication_strands() == 0) {
    throw Error(ErrorKind::kSterileMachine,
                "machine " + std::to_string(id_) + " has an empty replication segment");
  }
  NComputer child = *this;
  child.id_ = new_id;
  child.alive_ = true;
  return child;
}

Colony::Colony(LotkaVolterraParams lv_params, double scale)
    : lv_params_(lv_params), scale_(scale) {
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
    throw Error(ErrorKind::kDomain, "colony scale must be positive");
  }
}

void Colony::add(NComputer machine) {
  const MachineId id = machine.id();
  if (!machines_.try_emplace(id, std::move(machine)).second) {
    throw Error(ErrorKind::kDomain, "machine id " + std::to_string(id) + " already in colony");
  }
  next_id_ = std::max(next_id_, id + 1);
}

std::size_t Colony::alive_count() const {
  return static_cast<std::size_t>(std::count_if(
      machines_.begin(), machines_.end(), [](const auto& kv) { return kv.second.alive(); }));
}

std::size_t Colony::target(double y2) const {
  if (!(y2 >= 0.0) || !std::isfinite(y2)) {
    throw Error(ErrorKind::kDomain, "y2 must be finite and non-negative");
  }
  return static_cast<std::size_t>(std::round(scale_ * y2));
}

std::vector<ColonyEvent> Colony::reconcile(double y2) {
  const std::size_t want = target(y2);
  std::size_t have = alive_count();
  std::vector<ColonyEvent> events;
  if (want > have) {
    const auto source = std::find_if(machines_.begin(), machines_.end(),
                                     [](const auto& kv) { return kv.second.alive(); });
    if (source == machines_.end()) {
      throw Error(ErrorKind::kExtinctColony,
                  "colony needs " + std::to_string(want) + " machines but none is alive");
    }
    std::vector<NComputer> spawned;
    spawned.reserve(want - have);
    MachineId id = next_id_;
    for (; have < want; ++have, ++id) {
      spawned.push_back(source->second.replicate(id));
      events.push_back({ColonyEvent::Kind::kSpawn, id, source->first});
    }
    for (auto& m : spawned) machines_.emplace(m.id(), std::move(m));
    next_id_ = id;
  } else {
    for (auto it = machines_.end(); have > want && it != machines_.begin();) {
      --it;
      if (!it->second.alive()) continue;
      events.push_back({ColonyEvent::Kind::kKill, it->first, std::nullopt});
      it = machines_.erase(it);
      --have;
    }
  }
  return events;
}

}  // namespace noosphere
