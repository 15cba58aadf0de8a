#include "dla/orbits.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "dla/closure.hpp"

namespace dla {

namespace {

constexpr int kStrings = 15;

PauliString two_site(int i) { return PauliString::from_index(2, static_cast<uint64_t>(i) + 1); }
int slot(const PauliString& p) { return static_cast<int>(p.index()) - 1; }

struct Table {
  std::array<std::array<int8_t, kStrings>, kStrings> comm{};
  Table() {
    for (int i = 0; i < kStrings; ++i)
      for (int j = 0; j < kStrings; ++j) {
        auto c = commutator_string(two_site(i), two_site(j));
        comm[i][j] = c ? static_cast<int8_t>(slot(*c)) : -1;
      }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

uint16_t close_mask(uint16_t m) {
  const auto& t = table();
  uint16_t cur = m;
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < kStrings; ++i) {
      if (!(cur >> i & 1)) continue;
      for (int j = i + 1; j < kStrings; ++j) {
        if (!(cur >> j & 1)) continue;
        int c = t.comm[i][j];
        if (c >= 0 && !(cur >> c & 1)) {
          cur |= static_cast<uint16_t>(1u << c);
          grew = true;
        }
      }
    }
  }
  return cur;
}

uint16_t to_mask(std::span<const PauliString> set) {
  uint16_t m = 0;
  for (const auto& p : set) {
    if (p.n() != 2 || p.is_identity()) throw PauliError("two-site non-identity strings expected");
    m |= static_cast<uint16_t>(1u << slot(p));
  }
  return m;
}

std::vector<PauliString> from_mask(uint16_t m) {
  std::vector<PauliString> out;
  for (int i = 0; i < kStrings; ++i)
    if (m >> i & 1) out.push_back(two_site(i));
  std::sort(out.begin(), out.end());
  return out;
}

int letter_slot(char c) { return c == 'X' ? 1 : c == 'Y' ? 2 : 3; }

}  // namespace

PauliString GroupElement::apply(const PauliString& p) const {
  const uint8_t c0 = static_cast<uint8_t>((p.x() & 1) | ((p.z() & 1) << 1));
  const uint8_t c1 = static_cast<uint8_t>(((p.x() >> 1) & 1) | (((p.z() >> 1) & 1) << 1));
  uint8_t a = perm[c0], b = perm[c1];
  if (swap) std::swap(a, b);
  return PauliString(2, (a & 1u) | ((b & 1u) << 1), ((a >> 1) & 1u) | (((b >> 1) & 1u) << 1));
}

std::vector<PauliString> GroupElement::apply(std::span<const PauliString> set) const {
  std::vector<PauliString> out;
  for (const auto& p : set) out.push_back(apply(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> group_elements() {
  std::vector<GroupElement> out;
  for (const char* images : {"XYZ", "XZY", "YXZ", "YZX", "ZXY", "ZYX"})
    for (bool sw : {false, true}) out.push_back({letter_perm(images), sw});
  return out;
}

Invariants invariants(std::span<const PauliString> basis) {
  Invariants inv;
  std::array<bool, 4> left{}, right{};
  for (const auto& p : basis) {
    const char a = p.letter(0), b = p.letter(1);
    if (a == 'I' || b == 'I') {
      ++inv.s;
      if (b == 'I') left[letter_slot(a)] = true;
      if (a == 'I') right[letter_slot(b)] = true;
    } else if (a == b) {
      ++inv.e;
    } else {
      ++inv.d;
    }
  }
  for (int k = 1; k < 4; ++k) inv.p += left[k] && right[k];
  return inv;
}

namespace {

OrbitRecord orbit_record(std::span<const PauliString> basis) {
  std::vector<PauliString> sorted(basis.begin(), basis.end());
  sort_unique(sorted);
  to_mask(sorted);
  if (!is_closed(sorted)) throw std::invalid_argument("canonicalize: basis is not commutator-closed");
  std::set<std::vector<PauliString>> images;
  int fixing = 0;
  for (const auto& g : group_elements()) {
    auto img = g.apply(sorted);
    if (img == sorted) ++fixing;
    images.insert(std::move(img));
  }
  OrbitRecord r;
  r.canonical_basis = *images.begin();
  r.invariants = invariants(r.canonical_basis);
  r.orbit_size = static_cast<int>(images.size());
  r.stabilizer_order = fixing;
  r.type = subalgebra_type(r.canonical_basis);
  return r;
}

const std::map<std::vector<PauliString>, FamilyId>& family_of_canonical() {
  static const auto table = [] {
    std::map<std::vector<PauliString>, FamilyId> m;
    for (const auto& f : all_families())
      m.emplace(orbit_record(from_mask(close_mask(to_mask(catalog_generators(f))))).canonical_basis, f);
    return m;
  }();
  return table;
}

}  // namespace

OrbitRecord canonicalize(std::span<const PauliString> basis) {
  OrbitRecord r = orbit_record(basis);
  const auto& table = family_of_canonical();
  if (auto it = table.find(r.canonical_basis); it != table.end()) r.matched_family = it->second;
  return r;
}

// a: the two-letter strings alone generate the algebra.
// b: otherwise, the two-letter strings plus complete pairs AI, IA generate it.
// c: everything else.
Kind subalgebra_type(std::span<const PauliString> basis) {
  const uint16_t full = to_mask(basis);
  uint16_t doubles = 0, pairs = 0;
  for (const auto& p : basis) {
    if (p.weight() == 2) {
      doubles |= static_cast<uint16_t>(1u << slot(p));
    } else {
      PauliString mirror(2, ((p.x() & 1) << 1) | (p.x() >> 1), ((p.z() & 1) << 1) | (p.z() >> 1));
      if (full >> slot(mirror) & 1) pairs |= static_cast<uint16_t>(1u << slot(p));
    }
  }
  if (doubles && close_mask(doubles) == full) return Kind::a;
  if ((doubles | pairs) && close_mask(doubles | pairs) == full) return Kind::b;
  return Kind::c;
}

Inventory scan_power_sets() {
  std::vector<bool> is_algebra(1u << kStrings, false);
  for (uint32_t m = 1; m < (1u << kStrings); ++m) is_algebra[close_mask(static_cast<uint16_t>(m))] = true;

  Inventory inv;
  std::map<std::vector<PauliString>, size_t> orbit_of;
  std::vector<std::set<Kind>> orbit_types;
  for (uint32_t m = 1; m < (1u << kStrings); ++m) {
    if (!is_algebra[m]) continue;
    Subalgebra s{from_mask(static_cast<uint16_t>(m)), Kind::a};
    s.type = subalgebra_type(s.basis);
    (s.type == Kind::a ? inv.a_count : s.type == Kind::b ? inv.b_count : inv.c_count)++;
    OrbitRecord rec = canonicalize(s.basis);
    auto [it, fresh] = orbit_of.try_emplace(rec.canonical_basis, inv.orbits.size());
    if (fresh) {
      inv.orbits.push_back(rec);
      orbit_types.emplace_back();
    }
    orbit_types[it->second].insert(s.type);
    inv.subalgebras.push_back(std::move(s));
  }

  std::vector<size_t> order(inv.orbits.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
    const auto& a = inv.orbits[i];
    const auto& b = inv.orbits[j];
    if (a.matched_family && b.matched_family) return *a.matched_family < *b.matched_family;
    if (a.matched_family || b.matched_family) return a.matched_family.has_value();
    return a.canonical_basis < b.canonical_basis;
  });
  std::vector<OrbitRecord> sorted;
  for (size_t k = 0; k < order.size(); ++k) {
    sorted.push_back(inv.orbits[order[k]]);
    if (orbit_types[order[k]].size() != 1) inv.flagged.push_back(k);
  }
  inv.orbits = std::move(sorted);
  return inv;
}

}  // namespace dla
