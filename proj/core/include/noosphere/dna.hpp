#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace noosphere {

enum class Base : char { A = 'A', C = 'C', G = 'G', T = 'T' };

std::optional<Base> base_from_char(char c) noexcept;

using Bits = std::vector<bool>;

// "10101001" <-> bits. bits_from_string throws kParse on other characters.
Bits bits_from_string(std::string_view text);
std::string to_string(const Bits& bits);

class DnaStrand {
 public:
  DnaStrand() = default;
  explicit DnaStrand(std::vector<Base> bases) : bases_(std::move(bases)) {}

  // Throws kParse on any character outside ACGT.
  static DnaStrand parse(std::string_view text);

  const std::vector<Base>& bases() const noexcept { return bases_; }
  std::size_t size() const noexcept { return bases_.size(); }
  bool empty() const noexcept { return bases_.empty(); }
  Base operator[](std::size_t i) const { return bases_[i]; }

  DnaStrand substr(std::size_t pos, std::size_t count) const;
  DnaStrand& append(const DnaStrand& other);
  std::string str() const;

  bool operator==(const DnaStrand&) const = default;

 private:
  std::vector<Base> bases_;
};

// A and C read as 0, G and T as 1.
Bits dna_to_binary(const DnaStrand& strand);

struct Canonical {};
struct Randomized {
  std::uint64_t seed = 0;
};
using EncodingStyle = std::variant<Canonical, Randomized>;

// Canonical writes 0 as A and 1 as G. Randomized picks A/C or G/T with equal
// probability from a seeded mt19937_64, so the output is reproducible.
DnaStrand binary_to_dna(const Bits& bits, EncodingStyle style = Canonical{});

}  // namespace noosphere
