#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noosphere/dna.hpp"
#include "noosphere/error.hpp"
#include "noosphere/noosim.hpp"

namespace noosphere {

inline constexpr std::size_t kAddressBases = 19;
inline constexpr std::size_t kPayloadBases = 96;
inline constexpr std::size_t kStrandBases = kAddressBases + kPayloadBases;

using Address = std::uint32_t;
inline constexpr Address kAddressLimit = Address{1} << kAddressBases;

struct AddressRange {
  Address first = 0;
  Address last = 0;  // inclusive

  bool contains(Address a) const noexcept { return a >= first && a <= last; }
  bool operator==(const AddressRange&) const = default;
};

// Top 256 addresses hold the machine's own construction description.
inline constexpr AddressRange kDefaultReplicationSegment{kAddressLimit - 256, kAddressLimit - 1};

enum class Access { kProtected, kUnlocked };

// Canonical 19-base address prefix, most significant bit first.
DnaStrand encode_address(Address address);
Address decode_address(const DnaStrand& strand);

struct SearchHit {
  Address address = 0;
  std::size_t offset = 0;

  auto operator<=>(const SearchHit&) const = default;
};

// Addressed store of 115-base strands (19 address + 96 payload). Writes and
// deletes inside the replication segment need Access::kUnlocked.
class DnaMemory {
 public:
  explicit DnaMemory(AddressRange replication_segment = kDefaultReplicationSegment);

  // Encodes address and payload canonically; overwrites any existing strand.
  void write(Address address, const Bits& payload, Access access = Access::kProtected);
  // Stores a full strand as given, keyed by its decoded address prefix.
  void write_strand(const DnaStrand& strand, Access access = Access::kProtected);
  Bits read(Address address) const;
  void erase(Address address, Access access = Access::kProtected);

  bool contains(Address address) const { return strands_.contains(address); }
  const DnaStrand& strand(Address address) const;
  DnaStrand payload(Address address) const;
  std::vector<Address> addresses() const;
  std::size_t size() const noexcept { return strands_.size(); }
  bool empty() const noexcept { return strands_.empty(); }

  // Exact, possibly overlapping matches inside payloads, in (address, offset) order.
  std::vector<SearchHit> search(const DnaStrand& pattern) const;

  const AddressRange& replication_segment() const noexcept { return segment_; }
  // Number of strands stored inside the replication segment.
  std::size_t replication_strands() const;

  bool operator==(const DnaMemory&) const = default;

 private:
  void check_access(Address address, Access access) const;

  std::map<Address, DnaStrand> strands_;
  AddressRange segment_;
};

struct Register {
  std::string name;
  Bits bits;

  bool operator==(const Register&) const = default;
};

struct AluConfig {
  std::size_t width = 12;
  std::size_t height = 8;
  std::size_t steps = 1;

  std::size_t capacity() const noexcept { return width * height; }
  bool operator==(const AluConfig&) const = default;
};

using MachineId = std::uint64_t;

// The N-computer: DNA main memory, a control unit (the member operations),
// general-purpose registers and a Game of Life ALU.
class NComputer {
 public:
  NComputer(MachineId id, DnaMemory memory, const std::vector<std::string>& register_names,
            std::size_t register_width, AluConfig alu);

  MachineId id() const noexcept { return id_; }
  bool alive() const noexcept { return alive_; }
  void shutdown() noexcept { alive_ = false; }

  const DnaMemory& memory() const noexcept { return memory_; }
  DnaMemory& memory() noexcept { return memory_; }
  const std::vector<Register>& registers() const noexcept { return registers_; }
  std::size_t register_width() const noexcept { return register_width_; }
  const AluConfig& alu() const noexcept { return alu_; }

  const Bits& reg(std::string_view name) const;
  void set_register(std::string_view name, const Bits& bits);

  // Lays the register out row-major on the ALU torus, runs alu().steps
  // generations, reads the same cells back into the register and returns them.
  Bits alu_execute(std::string_view name);

  void load_register(std::string_view name, Address address);
  void store_register(std::string_view name, Address address, Access access = Access::kProtected);

  // Deep copy with a fresh id. Throws kDeadMachine or kSterileMachine.
  NComputer replicate(MachineId new_id) const;

 private:
  Register& find(std::string_view name);
  const Register& find(std::string_view name) const;

  MachineId id_;
  DnaMemory memory_;
  std::vector<Register> registers_;
  std::size_t register_width_;
  AluConfig alu_;
  bool alive_ = true;
};

struct ColonyEvent {
  enum class Kind { kSpawn, kKill };

  Kind kind = Kind::kSpawn;
  MachineId machine = 0;
  std::optional<MachineId> parent;  // spawns only

  bool operator==(const ColonyEvent&) const = default;
};

// Population of N-computers whose size follows scale * y2 of a
// Lotka-Volterra trajectory. Killed machines leave the colony.
class Colony {
 public:
  Colony(LotkaVolterraParams lv_params, double scale);

  // Throws kDomain if the id is already taken.
  void add(NComputer machine);

  const LotkaVolterraParams& lv_params() const noexcept { return lv_params_; }
  double scale() const noexcept { return scale_; }
  const std::map<MachineId, NComputer>& machines() const noexcept { return machines_; }
  std::size_t alive_count() const;

  // round(scale * y2), halves away from zero.
  std::size_t target(double y2) const;

  // Spawns from the lowest-id alive machine or kills the highest-id alive
  // machines until alive_count() == target(y2). The colony is unchanged if
  // this throws.
  std::vector<ColonyEvent> reconcile(double y2);

 private:
  LotkaVolterraParams lv_params_;
  double scale_;
  std::map<MachineId, NComputer> machines_;
  MachineId next_id_ = 0;
};

}  // namespace noosphere
