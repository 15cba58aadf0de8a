#include "dla/catalog.hpp"

#include <algorithm>
#include <map>

namespace dla {

namespace {

struct Entry {
  Kind kind;
  int index;
  const char* generators;
};

constexpr Entry kCatalog[] = {
    {Kind::a, 0, "XX"},
    {Kind::a, 1, "XY"},
    {Kind::a, 2, "XY,YX"},
    {Kind::a, 3, "XX,YZ"},
    {Kind::a, 4, "XX,YY"},
    {Kind::a, 5, "XY,YZ"},
    {Kind::a, 6, "XX,YZ,ZY"},
    {Kind::a, 7, "XX,YY,ZZ"},
    {Kind::a, 8, "XX,XZ"},
    {Kind::a, 9, "XY,XZ"},
    {Kind::a, 10, "XY,YZ,ZX"},
    {Kind::a, 11, "XY,YX,YZ"},
    {Kind::a, 12, "XX,XY,YZ"},
    {Kind::a, 13, "YY,YZ,XX"},
    {Kind::a, 14, "XX,YY,XY"},
    {Kind::a, 15, "XX,XY,XZ"},
    {Kind::a, 16, "XY,YX,YZ,ZY"},
    {Kind::a, 17, "XX,XY,ZX"},
    {Kind::a, 18, "XX,XZ,YY,ZY"},
    {Kind::a, 19, "XX,XY,ZX,YZ"},
    {Kind::a, 20, "XX,YY,ZZ,ZY"},
    {Kind::a, 21, "XX,YY,XY,ZX"},
    {Kind::a, 22, "XX,XY,XZ,YX,ZX"},
    {Kind::b, 0, "XI,IX"},
    {Kind::b, 1, "XX,XI,IX"},
    {Kind::b, 2, "XY,XI,IX"},
    {Kind::b, 3, "XI,YI,IX,IY"},
    {Kind::b, 4, "XX,XY,XI,IX"},
    {Kind::c, 0, "XI"},
    {Kind::c, 1, "XY,XI"},
    {Kind::c, 2, "XX,XI"},
    {Kind::c, 3, "XI,IY"},
    {Kind::c, 4, "XY,XI,IY"},
    {Kind::c, 5, "XI,YI,ZI"},
    {Kind::c, 6, "XX,XY,XI"},
    {Kind::c, 7, "XI,YI,IX"},
};

int kind_size(Kind k) { return k == Kind::a ? 23 : k == Kind::b ? 5 : 8; }

const Entry& lookup(FamilyId f) {
  for (const auto& e : kCatalog)
    if (e.kind == f.kind && e.index == f.index) return e;
  throw std::invalid_argument("unknown family: " + f.label());
}

uint8_t code_of(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Z': return 2;
    case 'Y': return 3;
  }
  throw PauliError(std::string("invalid letter '") + c + "'");
}

void check_two_site(std::span<const PauliString> gens2) {
  for (const auto& g : gens2)
    if (g.n() != 2) throw PauliError("two-site generator expected, got " + g.str());
}

// A at 1-based site i, B at 1-based site j.
PauliString place(const PauliString& ab, unsigned i, unsigned j, unsigned n) {
  uint64_t x = 0, z = 0;
  x |= (ab.x() & 1ull) << (i - 1);
  z |= (ab.z() & 1ull) << (i - 1);
  x |= ((ab.x() >> 1) & 1ull) << (j - 1);
  z |= ((ab.z() >> 1) & 1ull) << (j - 1);
  return PauliString(n, x, z);
}

}  // namespace

std::string FamilyId::label() const {
  const char k = kind == Kind::a ? 'a' : kind == Kind::b ? 'b' : 'c';
  return std::string(1, k) + std::to_string(index);
}

FamilyId FamilyId::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad family name: " + std::string(text));
  Kind k;
  switch (text[0]) {
    case 'a': k = Kind::a; break;
    case 'b': k = Kind::b; break;
    case 'c': k = Kind::c; break;
    default: throw std::invalid_argument("bad family name: " + std::string(text));
  }
  int idx = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad family name: " + std::string(text));
    idx = idx * 10 + (c - '0');
    if (idx > 99) break;
  }
  if (idx >= kind_size(k) || (text.size() > 2 && text[1] == '0'))
    throw std::invalid_argument("unknown family: " + std::string(text));
  return {k, idx};
}

std::string to_string(Topology t) {
  switch (t) {
    case Topology::open: return "open";
    case Topology::periodic: return "periodic";
    case Topology::permutation: return "permutation";
  }
  return "?";
}

Topology parse_topology(std::string_view text) {
  if (text == "open") return Topology::open;
  if (text == "periodic") return Topology::periodic;
  if (text == "permutation") return Topology::permutation;
  throw std::invalid_argument("unknown topology: " + std::string(text));
}

std::vector<FamilyId> all_families() {
  std::vector<FamilyId> out;
  for (const auto& e : kCatalog) out.push_back({e.kind, e.index});
  return out;
}

std::vector<FamilyId> chain_families() {
  std::vector<FamilyId> out;
  for (const auto& e : kCatalog)
    if (e.kind != Kind::c) out.push_back({e.kind, e.index});
  return out;
}

std::vector<PauliString> catalog_generators(FamilyId family) {
  return parse_list(lookup(family).generators);
}

std::vector<PauliString> frustration_generators(FamilyId family) {
  if (family == FamilyId{Kind::a, 8}) return parse_list("XX,IY");
  if (family == FamilyId{Kind::a, 14}) return parse_list("XX,ZI,IZ");
  return catalog_generators(family);
}

std::vector<PauliString> extend_open(std::span<const PauliString> gens2, unsigned n) {
  if (n < 2) throw std::invalid_argument("open extension needs n >= 2");
  check_two_site(gens2);
  std::vector<PauliString> out;
  for (const auto& g : gens2)
    for (unsigned i = 1; i + 1 <= n; ++i) out.push_back(place(g, i, i + 1, n));
  sort_unique(out);
  return out;
}

std::vector<PauliString> extend_periodic(std::span<const PauliString> gens2, unsigned n) {
  if (n < 3) throw std::invalid_argument("periodic extension needs n >= 3");
  auto out = extend_open(gens2, n);
  // wrap term B_1 A_n
  for (const auto& g : gens2) out.push_back(place(g, n, 1, n));
  sort_unique(out);
  return out;
}

std::vector<PauliString> extend_permutation(std::span<const PauliString> gens2, unsigned n) {
  if (n < 2) throw std::invalid_argument("permutation extension needs n >= 2");
  check_two_site(gens2);
  std::vector<PauliString> out;
  for (const auto& g : gens2)
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j)
        if (i != j) out.push_back(place(g, i, j, n));
  sort_unique(out);
  return out;
}

std::vector<PauliString> extend(std::span<const PauliString> gens2, unsigned n, Topology t) {
  switch (t) {
    case Topology::open: return extend_open(gens2, n);
    case Topology::periodic: return extend_periodic(gens2, n);
    case Topology::permutation: return extend_permutation(gens2, n);
  }
  return {};
}

ModelSpec make_model(FamilyId family, unsigned n, Topology t) {
  return ModelSpec{family, n, t, catalog_generators(family)};
}

std::vector<PauliString> model_generators(const ModelSpec& spec) {
  if (spec.n == 2) {
    auto g = spec.two_site_generators;
    if (spec.topology == Topology::permutation) return extend_permutation(g, 2);
    sort_unique(g);
    return g;
  }
  return extend(spec.two_site_generators, spec.n, spec.topology);
}

LetterPerm letter_perm(std::string_view images_of_xyz) {
  if (images_of_xyz.size() != 3) throw std::invalid_argument("letter permutation needs 3 letters");
  LetterPerm p{0, 0, 0, 0};
  p[code_of('X')] = code_of(images_of_xyz[0]);
  p[code_of('Y')] = code_of(images_of_xyz[1]);
  p[code_of('Z')] = code_of(images_of_xyz[2]);
  uint8_t seen = 0;
  for (int c = 1; c < 4; ++c) seen |= 1u << p[c];
  if (seen != 0b1110) throw std::invalid_argument("not a permutation of X, Y, Z");
  return p;
}

LetterPerm compose(const LetterPerm& outer, const LetterPerm& inner) {
  LetterPerm r{};
  for (int c = 0; c < 4; ++c) r[c] = outer[inner[c]];
  return r;
}

SiteLetterMap SiteLetterMap::identity(unsigned n) {
  return SiteLetterMap(std::vector<LetterPerm>(n, LetterPerm{0, 1, 2, 3}));
}

SiteLetterMap SiteLetterMap::psi(unsigned n) {
  std::vector<LetterPerm> v(n, LetterPerm{0, 1, 2, 3});
  for (unsigned j = 2; j <= n; j += 2) v[j - 1] = letter_perm("YXZ");
  return SiteLetterMap(std::move(v));
}

SiteLetterMap SiteLetterMap::phi(unsigned n) {
  std::vector<LetterPerm> v(n, LetterPerm{0, 1, 2, 3});
  for (unsigned j = 2; j <= n; j += 2) v[j - 1] = letter_perm("XZY");
  return SiteLetterMap(std::move(v));
}

SiteLetterMap SiteLetterMap::gamma(unsigned n) {
  const LetterPerm g = letter_perm("ZXY");
  std::vector<LetterPerm> v;
  LetterPerm acc{0, 1, 2, 3};
  for (unsigned j = 1; j <= n; ++j) {
    acc = compose(g, acc);
    v.push_back(acc);
  }
  return SiteLetterMap(std::move(v));
}

PauliString SiteLetterMap::apply(const PauliString& p) const {
  if (p.n() != n()) throw PauliError("letter map length mismatch");
  uint64_t x = 0, z = 0;
  for (unsigned j = 0; j < p.n(); ++j) {
    uint8_t c = static_cast<uint8_t>(((p.x() >> j) & 1) | (((p.z() >> j) & 1) << 1));
    uint8_t d = perms_[j][c];
    x |= static_cast<uint64_t>(d & 1) << j;
    z |= static_cast<uint64_t>((d >> 1) & 1) << j;
  }
  return PauliString(p.n(), x, z);
}

std::vector<PauliString> SiteLetterMap::apply(std::span<const PauliString> ps) const {
  std::vector<PauliString> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(apply(p));
  sort_unique(out);
  return out;
}

nlohmann::json catalog_json() {
  nlohmann::json fams = nlohmann::json::object();
  for (const auto& e : kCatalog) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : parse_list(e.generators)) gens.push_back(g.str());
    fams[FamilyId{e.kind, e.index}.label()] = gens;
  }
  return {{"version", 1}, {"families", fams}};
}

}  // namespace dla
