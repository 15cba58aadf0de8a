#include "dla/structure.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

namespace dla {

namespace {

// Null space of the rows over GF(2), columns 0..ncols-1.
std::vector<uint64_t> gf2_kernel(std::vector<uint64_t> rows, unsigned ncols) {
  std::vector<unsigned> pivots;
  size_t r = 0;
  for (unsigned c = 0; c < ncols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && !((rows[p] >> c) & 1)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  uint64_t pivot_mask = 0;
  for (unsigned c : pivots) pivot_mask |= 1ull << c;
  std::vector<uint64_t> out;
  for (unsigned c = 0; c < ncols; ++c) {
    if ((pivot_mask >> c) & 1) continue;
    uint64_t v = 1ull << c;
    for (size_t i = 0; i < r; ++i)
      if ((rows[i] >> c) & 1) v |= 1ull << pivots[i];
    out.push_back(v);
  }
  return out;
}

// Reduced echelon form keyed by the highest set bit, largest pivot first.
std::vector<uint64_t> echelon(std::vector<uint64_t> vs) {
  std::vector<uint64_t> basis;
  for (uint64_t v : vs) {
    for (uint64_t b : basis)
      if (v & (1ull << (63 - std::countl_zero(b)))) v ^= b;
    if (!v) continue;
    const uint64_t top = 1ull << (63 - std::countl_zero(v));
    for (auto& b : basis)
      if (b & top) b ^= v;
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), std::greater<>());
  }
  return basis;
}

std::vector<uint64_t> span_of(const std::vector<uint64_t>& basis) {
  std::vector<uint64_t> out;
  out.reserve(size_t{1} << basis.size());
  uint64_t cur = 0;
  out.push_back(0);
  for (uint64_t k = 1; k < (1ull << basis.size()); ++k) {
    cur ^= basis[std::countr_zero(k)];
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t constraint_row(const PauliString& g) { return g.z() | (g.x() << g.n()); }

}  // namespace

long double StabilizerSet::order() const { return std::ldexp(1.0L, static_cast<int>(rank())); }

bool StabilizerSet::contains(const PauliString& p) const {
  if (p.n() != n) return false;
  if (enumerated()) return std::binary_search(elements.begin(), elements.end(), p);
  uint64_t v = p.index();
  for (const auto& b : generator_basis) {
    const uint64_t bi = b.index();
    if (v & (1ull << (63 - std::countl_zero(bi)))) v ^= bi;
  }
  return v == 0;
}

StabilizerSet group_from_basis(unsigned n, std::vector<PauliString> basis) {
  std::vector<uint64_t> vs;
  for (const auto& b : basis) vs.push_back(b.index());
  auto ech = echelon(std::move(vs));
  StabilizerSet st;
  st.n = n;
  for (uint64_t v : ech) st.generator_basis.push_back(PauliString::from_index(n, v));
  if (ech.size() <= kEnumerateRank) {
    for (uint64_t v : span_of(ech)) st.elements.push_back(PauliString::from_index(n, v));
    std::sort(st.elements.begin(), st.elements.end());
  }
  return st;
}

StabilizerSet stabilizer(std::span<const PauliString> strings) {
  if (strings.empty()) throw PauliError("stabilizer of an empty set");
  const unsigned n = strings.front().n();
  std::vector<uint64_t> rows;
  for (const auto& g : strings) {
    if (g.n() != n) throw PauliError("mixed lengths in stabilizer input");
    rows.push_back(constraint_row(g));
  }
  std::vector<PauliString> basis;
  for (uint64_t v : gf2_kernel(std::move(rows), 2 * n)) basis.push_back(PauliString::from_index(n, v));
  return group_from_basis(n, std::move(basis));
}

StabilizerSet stabilizer_center(const StabilizerSet& st) {
  const auto& b = st.generator_basis;
  std::vector<uint64_t> gram;
  for (size_t i = 0; i < b.size(); ++i) {
    uint64_t row = 0;
    for (size_t j = 0; j < b.size(); ++j)
      if (!commutes(b[i], b[j])) row |= 1ull << j;
    gram.push_back(row);
  }
  std::vector<PauliString> basis;
  for (uint64_t combo : gf2_kernel(std::move(gram), static_cast<unsigned>(b.size()))) {
    PauliString acc = PauliString::identity(st.n);
    for (size_t j = 0; j < b.size(); ++j)
      if ((combo >> j) & 1) acc = string_product(acc, b[j]);
    basis.push_back(acc);
  }
  return group_from_basis(st.n, std::move(basis));
}

std::vector<PauliString> center_strings(std::span<const PauliString> sorted_basis) {
  std::vector<PauliString> out;
  for (const auto& a : sorted_basis) {
    bool central = true;
    for (const auto& b : sorted_basis)
      if (anticommute_bits(a.x(), a.z(), b.x(), b.z())) {
        central = false;
        break;
      }
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<PauliString> center_strings(const DlaBasis& basis) { return center_strings(basis.basis()); }

uint64_t centralizer_dimension(const StabilizerSet& st, const StabilizerSet& center_of_st) {
  const unsigned commuting_rank = 2 * st.n - st.rank();
  return (1ull << commuting_rank) - (1ull << center_of_st.rank());
}

std::vector<PauliString> centralizer_space(const StabilizerSet& st, const StabilizerSet& center_of_st) {
  std::vector<uint64_t> rows;
  for (const auto& g : st.generator_basis) rows.push_back(constraint_row(g));
  auto kernel = gf2_kernel(std::move(rows), 2 * st.n);
  if (kernel.size() > 28) throw std::length_error("centralizer space too large to enumerate");
  std::vector<PauliString> out;
  for (uint64_t v : span_of(kernel)) {
    if (v == 0) continue;
    PauliString p = PauliString::from_index(st.n, v);
    if (center_of_st.contains(p)) continue;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Involution::sign(const PauliString& p) const {
  return -transpose_sign(p) * (commutes(q, p) ? 1 : -1);
}

size_t involution_fixed_dimension(std::span<const PauliString> space, const Involution& inv) {
  return static_cast<size_t>(std::count_if(space.begin(), space.end(), [&](const PauliString& p) { return inv.fixes(p); }));
}

uint64_t IsoTerm::dimension() const {
  switch (type) {
    case Type::u1: return 1;
    case Type::su: return N * N - 1;
    case Type::so: return N * (N - 1) / 2;
    case Type::sp: return N * (2 * N + 1);
  }
  return 0;
}

IsoExpression::IsoExpression(std::vector<IsoTerm> terms) {
  std::map<std::pair<IsoTerm::Type, uint64_t>, unsigned> merged;
  for (auto t : terms) {
    if (t.multiplicity == 0) continue;
    if (t.type == IsoTerm::Type::so && t.N == 2) t = {IsoTerm::Type::u1, 1, t.multiplicity};
    if (t.type == IsoTerm::Type::u1) t.N = 1;
    if (t.dimension() == 0) continue;
    merged[{t.type, t.N}] += t.multiplicity;
  }
  for (auto it = merged.rbegin(); it != merged.rend(); ++it)
    terms_.push_back({it->first.first, it->first.second, it->second});
}

IsoExpression IsoExpression::operator+(const IsoExpression& other) const {
  auto all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return IsoExpression(std::move(all));
}

uint64_t IsoExpression::dimension() const {
  uint64_t d = 0;
  for (const auto& t : terms_) d += t.dimension() * t.multiplicity;
  return d;
}

unsigned IsoExpression::u1_count() const {
  unsigned c = 0;
  for (const auto& t : terms_)
    if (t.type == IsoTerm::Type::u1) c += t.multiplicity;
  return c;
}

std::vector<uint64_t> IsoExpression::simple_dimensions() const {
  std::vector<uint64_t> out;
  for (const auto& t : terms_)
    if (t.type != IsoTerm::Type::u1)
      for (unsigned k = 0; k < t.multiplicity; ++k) out.push_back(t.dimension());
  return out;
}

std::string IsoExpression::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    switch (t.type) {
      case IsoTerm::Type::u1: s += "u1"; break;
      case IsoTerm::Type::su: s += "su(" + std::to_string(t.N) + ")"; break;
      case IsoTerm::Type::so: s += "so(" + std::to_string(t.N) + ")"; break;
      case IsoTerm::Type::sp: s += "sp(" + std::to_string(t.N) + ")"; break;
    }
    if (t.multiplicity > 1) s += "^" + std::to_string(t.multiplicity);
  }
  return s;
}

IsoExpression IsoExpression::parse(std::string_view text) {
  std::vector<IsoTerm> terms;
  auto fail = [&](const std::string& why) { return IsoError("malformed expression '" + std::string(text) + "': " + why); };
  auto number = [&](std::string_view sv) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc() || ptr != sv.data() + sv.size() || sv.empty()) throw fail("bad number '" + std::string(sv) + "'");
    return v;
  };
  size_t start = 0;
  bool any = false;
  while (start <= text.size()) {
    size_t end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    std::string tok;
    for (char c : text.substr(start, end - start))
      if (!std::isspace(static_cast<unsigned char>(c))) tok += c;
    if (tok.empty()) throw fail("empty summand");
    unsigned mult = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      mult = static_cast<unsigned>(number(std::string_view(tok).substr(caret + 1)));
      tok.resize(caret);
    }
    IsoTerm t;
    t.multiplicity = mult;
    if (tok == "u1" || tok == "u(1)") {
      t.type = IsoTerm::Type::u1;
    } else {
      if (tok.size() < 5 || tok[2] != '(' || tok.back() != ')') throw fail("unknown summand '" + tok + "'");
      std::string name = tok.substr(0, 2);
      if (name == "su") t.type = IsoTerm::Type::su;
      else if (name == "so") t.type = IsoTerm::Type::so;
      else if (name == "sp") t.type = IsoTerm::Type::sp;
      else throw fail("unknown summand '" + tok + "'");
      t.N = number(std::string_view(tok).substr(3, tok.size() - 4));
      if (t.N == 0) throw fail("zero rank");
    }
    terms.push_back(t);
    any = true;
    start = end + 1;
  }
  if (!any) throw fail("empty");
  return IsoExpression(std::move(terms));
}

size_t FrustrationGraph::edge_count() const {
  size_t e = 0;
  for (const auto& a : adjacency) e += a.size();
  return e / 2;
}

FrustrationGraph frustration_graph(std::span<const PauliString> generators) {
  FrustrationGraph g;
  g.vertices.assign(generators.begin(), generators.end());
  sort_unique(g.vertices);
  g.adjacency.resize(g.vertices.size());
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = i + 1; j < g.vertices.size(); ++j)
      if (!commutes(g.vertices[i], g.vertices[j])) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
  return g;
}

std::optional<IsoExpression> recognize_path_or_cycle(const FrustrationGraph& g) {
  const size_t V = g.vertices.size();
  std::vector<bool> seen(V, false);
  IsoExpression total;
  for (size_t s = 0; s < V; ++s) {
    if (seen[s]) continue;
    std::vector<size_t> comp{s};
    seen[s] = true;
    for (size_t k = 0; k < comp.size(); ++k)
      for (size_t w : g.adjacency[comp[k]])
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    size_t edges = 0, max_deg = 0;
    for (size_t v : comp) {
      edges += g.adjacency[v].size();
      max_deg = std::max(max_deg, g.adjacency[v].size());
    }
    edges /= 2;
    const uint64_t N = comp.size();
    if (max_deg > 2) return std::nullopt;
    if (edges + 1 == N) {
      total = total + IsoExpression::so(N + 1);
    } else if (edges == N && N >= 3) {
      PauliString prod = PauliString::identity(g.vertices[s].n());
      for (size_t v : comp) prod = string_product(prod, g.vertices[v]);
      total = total + IsoExpression::so(N, prod.is_identity() ? 1 : 2);
    } else {
      return std::nullopt;
    }
  }
  return total;
}

std::vector<std::vector<PauliString>> ideal_components(std::span<const PauliString> sorted_basis) {
  const size_t D = sorted_basis.size();
  std::vector<uint64_t> xs(D), zs(D);
  for (size_t i = 0; i < D; ++i) {
    xs[i] = sorted_basis[i].x();
    zs[i] = sorted_basis[i].z();
  }
  // unvisited vertices, shrinking as the search proceeds
  std::vector<size_t> rest(D);
  for (size_t i = 0; i < D; ++i) rest[i] = D - 1 - i;
  std::vector<std::vector<PauliString>> comps;
  while (!rest.empty()) {
    std::vector<size_t> queue{rest.back()};
    rest.pop_back();
    for (size_t k = 0; k < queue.size(); ++k) {
      const size_t v = queue[k];
      for (size_t r = 0; r < rest.size();) {
        const size_t w = rest[r];
        if (anticommute_bits(xs[v], zs[v], xs[w], zs[w])) {
          queue.push_back(w);
          rest[r] = rest.back();
          rest.pop_back();
        } else {
          ++r;
        }
      }
    }
    std::vector<PauliString> comp;
    for (size_t v : queue) comp.push_back(sorted_basis[v]);
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

std::vector<std::vector<PauliString>> ideal_components(const DlaBasis& basis) { return ideal_components(basis.basis()); }

namespace {

bool assign(const std::vector<uint64_t>& items, size_t k, std::vector<uint64_t>& room) {
  if (k == items.size()) return std::all_of(room.begin(), room.end(), [](uint64_t r) { return r == 0; });
  for (size_t c = 0; c < room.size(); ++c) {
    if (room[c] < items[k]) continue;
    // skip bins identical to an earlier one
    bool dup = false;
    for (size_t e = 0; e < c; ++e)
      if (room[e] == room[c]) dup = true;
    if (dup) continue;
    room[c] -= items[k];
    if (assign(items, k + 1, room)) return true;
    room[c] += items[k];
  }
  return false;
}

}  // namespace

IsoReport verify_iso(size_t dimension, size_t center_count, std::span<const size_t> component_sizes,
                     const IsoExpression& claim) {
  IsoReport r;
  r.dim_ok = claim.dimension() == dimension;
  r.center_ok = claim.u1_count() == center_count;
  std::vector<uint64_t> room;
  size_t singles = 0;
  for (size_t s : component_sizes) {
    if (s == 1) ++singles;
    else room.push_back(s);
  }
  auto items = claim.simple_dimensions();
  std::sort(items.begin(), items.end(), std::greater<>());
  r.component_consistent = singles == claim.u1_count() && assign(items, 0, room);
  return r;
}

IsoReport verify_iso(const DlaBasis& basis, const IsoExpression& claim) {
  auto comps = ideal_components(basis);
  std::vector<size_t> sizes;
  for (const auto& c : comps) sizes.push_back(c.size());
  return verify_iso(basis.dimension(), center_strings(basis).size(), sizes, claim);
}

}  // namespace dla
