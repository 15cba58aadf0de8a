#include "dla/report.hpp"

#include <algorithm>
#include <sstream>

namespace dla {

namespace {

nlohmann::json strings(std::span<const PauliString> ps) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

std::string kind_name(Kind k) { return k == Kind::a ? "a" : k == Kind::b ? "b" : "c"; }

std::string sizes_text(std::span<const size_t> sizes) {
  std::string s;
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(sizes[i]);
  }
  return s;
}

}  // namespace

StructureReport analyze(std::span<const PauliString> generators, std::span<const PauliString> frustration_generators,
                        const std::optional<IsoExpression>& claim, const CloseOptions& opts) {
  StructureReport r;
  auto basis = close(generators, opts);
  r.n = basis.n();
  r.dimension = basis.dimension();
  r.center = center_strings(basis);
  r.stabilizer = stabilizer(generators);
  for (const auto& c : ideal_components(basis)) r.component_sizes.push_back(c.size());
  std::sort(r.component_sizes.begin(), r.component_sizes.end(), std::greater<>());
  if (!frustration_generators.empty())
    r.frustration_verdict = recognize_path_or_cycle(frustration_graph(frustration_generators));
  r.iso_claim = claim;
  if (claim) r.iso_checks = verify_iso(r.dimension, r.center.size(), r.component_sizes, *claim);
  return r;
}

nlohmann::json to_json(const DlaBasis& basis, double seconds) {
  return {{"n", basis.n()},
          {"dimension", basis.dimension()},
          {"generator_count", basis.generator_count()},
          {"basis", strings(basis.basis())},
          {"seconds", seconds}};
}

nlohmann::json to_json(const StructureReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["dim"] = r.dimension;
  j["center"] = strings(r.center);
  j["stabilizer_generators"] = strings(r.stabilizer.generator_basis);
  j["stabilizer_order"] = static_cast<double>(r.stabilizer.order());
  if (r.stabilizer.enumerated()) j["stabilizer_elements"] = strings(r.stabilizer.elements);
  j["component_sizes"] = r.component_sizes;
  j["frustration_verdict"] = r.frustration_verdict ? nlohmann::json(r.frustration_verdict->str()) : nlohmann::json(nullptr);
  j["iso_claim"] = r.iso_claim ? nlohmann::json(r.iso_claim->str()) : nlohmann::json(nullptr);
  if (r.iso_checks) {
    j["iso_checks"] = {{"dim_ok", r.iso_checks->dim_ok},
                       {"center_ok", r.iso_checks->center_ok},
                       {"component_consistent", r.iso_checks->component_consistent},
                       {"status", "verified-necessary"}};
  } else {
    j["iso_checks"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const ClassificationRow& row) {
  nlohmann::json j;
  j["family"] = row.family.label();
  j["topology"] = to_string(row.topology);
  j["n"] = row.n;
  j["computed_dim"] = row.computed_dim;
  j["predicted_dim"] = row.predicted_dim ? nlohmann::json(*row.predicted_dim) : nlohmann::json(nullptr);
  j["predicted_expr"] = row.predicted_expr;
  j["center_dim"] = row.center_dim;
  j["component_sizes"] = row.component_sizes;
  j["component_consistent"] = row.component_consistent;
  j["verdict"] = to_string(row.verdict);
  j["seconds"] = row.seconds;
  j["note"] = row.note;
  return j;
}

nlohmann::json to_json(std::span<const ClassificationRow> rows) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

nlohmann::json to_json(const OrbitRecord& rec) {
  return {{"label", rec.matched_family ? rec.matched_family->label() : ""},
          {"type", kind_name(rec.type)},
          {"canonical_basis", strings(rec.canonical_basis)},
          {"dim", rec.dimension()},
          {"stabilizer_order", rec.stabilizer_order},
          {"orbit_size", rec.orbit_size},
          {"s", rec.invariants.s},
          {"p", rec.invariants.p},
          {"e", rec.invariants.e},
          {"d", rec.invariants.d}};
}

nlohmann::json to_json(const Inventory& inv) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& o : inv.orbits) orbits.push_back(to_json(o));
  return {{"total", inv.total()},
          {"a_count", inv.a_count},
          {"b_count", inv.b_count},
          {"c_count", inv.c_count},
          {"orbit_count", inv.orbits.size()},
          {"flagged", inv.flagged},
          {"orbits", orbits}};
}

std::string to_csv(std::span<const ClassificationRow> rows) {
  std::ostringstream os;
  os << "family,topology,n,computed_dim,predicted_dim,predicted_expr,center_dim,component_sizes,component_consistent,verdict,seconds\n";
  for (const auto& r : rows) {
    os << r.family.label() << ',' << to_string(r.topology) << ',' << r.n << ',' << r.computed_dim << ',';
    if (r.predicted_dim) os << *r.predicted_dim;
    os << ",\"" << r.predicted_expr << "\"," << r.center_dim << ",\"" << sizes_text(r.component_sizes) << "\","
       << (r.component_consistent ? "true" : "false") << ',' << to_string(r.verdict) << ',' << r.seconds << '\n';
  }
  return os.str();
}

std::string to_csv(const Inventory& inv) {
  std::ostringstream os;
  os << "label,type,basis,dim,stabilizer_order,orbit_size,s,p,e,d\n";
  for (const auto& o : inv.orbits) {
    os << (o.matched_family ? o.matched_family->label() : "") << ',' << kind_name(o.type) << ",\""
       << join(o.canonical_basis) << "\"," << o.dimension() << ',' << o.stabilizer_order << ',' << o.orbit_size << ','
       << o.invariants.s << ',' << o.invariants.p << ',' << o.invariants.e << ',' << o.invariants.d << '\n';
  }
  return os.str();
}

}  // namespace dla
