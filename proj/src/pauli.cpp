#include "dla/pauli.hpp"

#include <algorithm>
#include <bit>

namespace dla {

namespace {

uint64_t mask_for(unsigned n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }

void require_same(const PauliString& a, const PauliString& b) {
  if (a.n() != b.n())
    throw PauliError("length mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

}  // namespace

PauliString::PauliString(unsigned n, uint64_t x, uint64_t z) : n_(n), x_(x), z_(z) {
  if (n == 0 || n > kMaxSites) throw PauliError("site count out of range: " + std::to_string(n));
  if ((x | z) & ~mask_for(n)) throw PauliError("bits set beyond site count");
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw PauliError("empty Pauli string");
  if (text.size() > kMaxSites) throw PauliError("Pauli string longer than " + std::to_string(kMaxSites));
  uint64_t x = 0, z = 0;
  for (size_t j = 0; j < text.size(); ++j) {
    switch (text[j]) {
      case 'I': break;
      case 'X': x |= 1ull << j; break;
      case 'Y': x |= 1ull << j; z |= 1ull << j; break;
      case 'Z': z |= 1ull << j; break;
      default:
        throw PauliError(std::string("invalid character '") + text[j] + "' in Pauli string");
    }
  }
  return PauliString(static_cast<unsigned>(text.size()), x, z);
}

PauliString PauliString::from_index(unsigned n, uint64_t idx) {
  uint64_t m = mask_for(n);
  return PauliString(n, idx & m, (idx >> n) & m);
}

char PauliString::letter(unsigned site) const {
  bool xb = (x_ >> site) & 1, zb = (z_ >> site) & 1;
  return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

unsigned PauliString::weight() const { return std::popcount(x_ | z_); }

std::string PauliString::str() const {
  std::string s(n_, 'I');
  for (unsigned j = 0; j < n_; ++j) s[j] = letter(j);
  return s;
}

std::vector<PauliString> parse_list(std::string_view text) {
  std::vector<PauliString> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    out.push_back(PauliString::parse(tok));
    start = end + 1;
  }
  return out;
}

std::string join(std::span<const PauliString> strings, std::string_view sep) {
  std::string s;
  for (size_t i = 0; i < strings.size(); ++i) {
    if (i) s += sep;
    s += strings[i].str();
  }
  return s;
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same(a, b);
  return !anticommute_bits(a.x(), a.z(), b.x(), b.z());
}

SignedPauli product(const PauliString& a, const PauliString& b) {
  require_same(a, b);
  const uint64_t ax = a.x(), az = a.z(), bx = b.x(), bz = b.z();
  const uint64_t ay = ax & az, aX = ax & ~az, aZ = az & ~ax;
  const uint64_t by = bx & bz, bX = bx & ~bz, bZ = bz & ~bx;
  // XY = iZ, YZ = iX, ZX = iY and reversed orders give -i
  int plus = std::popcount(aX & by) + std::popcount(ay & bZ) + std::popcount(aZ & bX);
  int minus = std::popcount(ay & bX) + std::popcount(aZ & by) + std::popcount(aX & bZ);
  int phase = ((plus - minus) % 4 + 4) % 4;
  return {PauliString(a.n(), ax ^ bx, az ^ bz), phase};
}

std::optional<PauliString> commutator_string(const PauliString& a, const PauliString& b) {
  if (commutes(a, b)) return std::nullopt;
  return string_product(a, b);
}

int transpose_sign(const PauliString& a) { return (std::popcount(a.x() & a.z()) & 1) ? -1 : 1; }

PauliString embed(const PauliString& a, unsigned offset, unsigned n_total) {
  if (offset < 1 || offset + a.n() - 1 > n_total)
    throw PauliError("embed offset out of range");
  unsigned sh = offset - 1;
  return PauliString(n_total, a.x() << sh, a.z() << sh);
}

PauliString cyclic_shift(const PauliString& a, int k) {
  const unsigned n = a.n();
  const unsigned s = static_cast<unsigned>(((k % static_cast<int>(n)) + static_cast<int>(n)) % static_cast<int>(n));
  if (s == 0) return a;
  const uint64_t m = mask_for(n);
  auto rot = [&](uint64_t v) { return ((v >> s) | (v << (n - s))) & m; };
  return PauliString(n, rot(a.x()), rot(a.z()));
}

PauliString pattern(std::string_view letters, unsigned n) {
  std::string s(n, 'I');
  for (unsigned j = 0; j < n; ++j) s[j] = letters[j % letters.size()];
  return PauliString::parse(s);
}

PauliString single(char letter, unsigned site, unsigned n) {
  std::string s(n, 'I');
  s.at(site - 1) = letter;
  return PauliString::parse(s);
}

void sort_unique(std::vector<PauliString>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace dla
