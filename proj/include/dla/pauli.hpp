#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dla {

constexpr unsigned kMaxSites = 32;

class PauliError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Symplectic encoding. Site 1 is the leftmost character and the least
// significant bit. I = (0,0), X = (1,0), Z = (0,1), Y = (1,1).
class PauliString {
 public:
  PauliString() = default;
  PauliString(unsigned n, uint64_t x, uint64_t z);

  static PauliString identity(unsigned n) { return PauliString(n, 0, 0); }
  static PauliString parse(std::string_view text);

  unsigned n() const { return n_; }
  uint64_t x() const { return x_; }
  uint64_t z() const { return z_; }

  // 0-based site index
  char letter(unsigned site) const;
  bool is_identity() const { return (x_ | z_) == 0; }
  unsigned weight() const;
  std::string str() const;

  // Dense index in [0, 4^n), used for bitmaps.
  uint64_t index() const { return x_ | (z_ << n_); }
  static PauliString from_index(unsigned n, uint64_t idx);

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.z_ <=> b.z_;
  }

 private:
  unsigned n_ = 0;
  uint64_t x_ = 0;
  uint64_t z_ = 0;
};

struct PauliHash {
  size_t operator()(const PauliString& p) const noexcept {
    uint64_t h = (p.x() * 0x9E3779B97F4A7C15ull) ^ (p.z() * 0xBF58476D1CE4E5B9ull) ^ p.n();
    return static_cast<size_t>(h ^ (h >> 29));
  }
};

// Product with its power of i.
struct SignedPauli {
  PauliString string;
  int phase_exponent = 0;  // 0..3
};

std::vector<PauliString> parse_list(std::string_view text);
std::string join(std::span<const PauliString> strings, std::string_view sep = ",");

bool commutes(const PauliString& a, const PauliString& b);
SignedPauli product(const PauliString& a, const PauliString& b);
std::optional<PauliString> commutator_string(const PauliString& a, const PauliString& b);
int transpose_sign(const PauliString& a);

// offset is 1-based
PauliString embed(const PauliString& a, unsigned offset, unsigned n_total);
PauliString cyclic_shift(const PauliString& a, int k);

// Componentwise product with the phase dropped.
inline PauliString string_product(const PauliString& a, const PauliString& b) {
  return PauliString(a.n(), a.x() ^ b.x(), a.z() ^ b.z());
}

// Unchecked hot-path test on raw words.
inline bool anticommute_bits(uint64_t ax, uint64_t az, uint64_t bx, uint64_t bz) {
  return __builtin_popcountll((ax & bz) ^ (az & bx)) & 1;
}

// Repeat a pattern across n sites, e.g. pattern("YZ", 5) = YZYZY.
PauliString pattern(std::string_view letters, unsigned n);
// Single letter at 1-based site.
PauliString single(char letter, unsigned site, unsigned n);

void sort_unique(std::vector<PauliString>& v);

}  // namespace dla
