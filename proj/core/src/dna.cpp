#include "noosphere/dna.hpp"

#include <algorithm>
#include <random>

#include "noosphere/error.hpp"

namespace noosphere {

std::optional<Base> base_from_char(char c) noexcept {
  switch (c) {
    case 'A': return Base::A;
    case 'C': return Base::C;
    case 'G': return Base::G;
    case 'T': return Base::T;
    default: return std::nullopt;
  }
}

Bits bits_from_string(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError(1, "bit string has '" + std::string(1, text[i]) + "' at column " +
                              std::to_string(i + 1));
    }
    bits.push_back(text[i] == '1');
  }
  return bits;
}

std::string to_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out += b ? '1' : '0';
  return out;
}

DnaStrand DnaStrand::parse(std::string_view text) {
  std::vector<Base> bases;
  bases.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto base = base_from_char(text[i]);
    if (!base) {
      throw ParseError(1, "invalid base '" + std::string(1, text[i]) + "' at column " +
                              std::to_string(i + 1));
    }
    bases.push_back(*base);
  }
  return DnaStrand(std::move(bases));
}

DnaStrand DnaStrand::substr(std::size_t pos, std::size_t count) const {
  if (pos > bases_.size()) throw Error(ErrorKind::kDomain, "strand offset out of range");
  const std::size_t end = pos + std::min(count, bases_.size() - pos);
  return DnaStrand({bases_.begin() + static_cast<std::ptrdiff_t>(pos),
                    bases_.begin() + static_cast<std::ptrdiff_t>(end)});
}

DnaStrand& DnaStrand::append(const DnaStrand& other) {
  bases_.insert(bases_.end(), other.bases_.begin(), other.bases_.end());
  return *this;
}

std::string DnaStrand::str() const {
  std::string out;
  out.reserve(bases_.size());
  for (Base b : bases_) out += static_cast<char>(b);
  return out;
}

Bits dna_to_binary(const DnaStrand& strand) {
  Bits bits;
  bits.reserve(strand.size());
  for (Base b : strand.bases()) bits.push_back(b == Base::G || b == Base::T);
  return bits;
}

DnaStrand binary_to_dna(const Bits& bits, EncodingStyle style) {
  std::vector<Base> bases;
  bases.reserve(bits.size());
  if (const auto* r = std::get_if<Randomized>(&style)) {
    std::mt19937_64 rng(r->seed);
    for (bool b : bits) {
      const bool alt = (rng() >> 63) != 0;
      bases.push_back(b ? (alt ? Base::T : Base::G) : (alt ? Base::C : Base::A));
    }
  } else {
    for (bool b : bits) bases.push_back(b ? Base::G : Base::A);
  }
  return DnaStrand(std::move(bases));
}

}  // namespace noosphere
