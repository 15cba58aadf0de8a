#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dla/catalog.hpp"
#include "dla/classify.hpp"
#include "dla/closure.hpp"
#include "dla/orbits.hpp"
#include "dla/report.hpp"
#include "dla/structure.hpp"

using namespace dla;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kCap = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string generators;
  std::string family;
  std::string n_text;
  std::string topology = "open";
  std::string format = "json";
  std::string output;
  std::string orbit_of;
  std::string claim;
  unsigned threads = 1;
  double max_seconds = 0;
  size_t max_elements = 0;
  size_t list_limit = 100000;
};

struct Range {
  unsigned lo = 0, hi = 0;
};

unsigned parse_uint(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw UsageError("bad integer '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

// "5" or "3..8"
Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    unsigned v = parse_uint(text);
    return {v, v};
  }
  Range r{parse_uint(text.substr(0, dots)), parse_uint(text.substr(dots + 2))};
  if (r.hi < r.lo) throw UsageError("empty range " + text);
  return r;
}

CloseOptions close_options(const RunConfig& c) { return {c.threads, c.max_elements, c.max_seconds}; }

void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + c.output);
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void require_one_source(const RunConfig& c) {
  if (c.generators.empty() == c.family.empty()) throw UsageError("give exactly one of --generators or --family");
}

struct Model {
  std::vector<PauliString> generators;
  std::vector<PauliString> frustration;
  std::optional<FamilyId> family;
  Topology topology = Topology::open;
  unsigned n = 0;
};

std::vector<PauliString> place(const std::vector<PauliString>& gens, unsigned n, Topology t) {
  const unsigned len = gens.front().n();
  if (len == n) return gens;
  if (len == 2 && n > 2) return extend(gens, n, t);
  throw UsageError("generators of length " + std::to_string(len) + " do not fit n = " + std::to_string(n));
}

Model build_model(const RunConfig& c) {
  require_one_source(c);
  Model m;
  m.topology = parse_topology(c.topology);
  if (!c.family.empty()) {
    m.family = FamilyId::parse(c.family);
    m.n = c.n_text.empty() ? 2 : parse_uint(c.n_text);
    m.generators = model_generators(make_model(*m.family, m.n, m.topology));
    m.frustration = place(frustration_generators(*m.family), m.n, m.topology);
    return m;
  }
  auto gens = parse_list(c.generators);
  if (gens.empty()) throw UsageError("no generators");
  m.n = c.n_text.empty() ? gens.front().n() : parse_uint(c.n_text);
  m.generators = place(gens, m.n, m.topology);
  m.frustration = m.generators;
  return m;
}

std::string listing(const std::vector<PauliString>& strings, size_t limit) {
  std::ostringstream os;
  for (size_t i = 0; i < strings.size() && i < limit; ++i) os << "  " << strings[i].str() << '\n';
  if (strings.size() > limit) os << "  ... " << strings.size() - limit << " more\n";
  return os.str();
}

int cmd_close(const RunConfig& c) {
  Model m = build_model(c);
  const auto t0 = std::chrono::steady_clock::now();
  DlaBasis basis = close(m.generators, close_options(c));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.format == "json") {
    emit(c, dump(to_json(basis, secs)));
  } else if (c.format == "csv") {
    std::string out = "string\n";
    for (const auto& p : basis.basis()) out += p.str() + "\n";
    emit(c, out);
  } else {
    std::ostringstream os;
    os << "n " << basis.n() << "\ndim " << basis.dimension() << "\nseconds " << secs << "\nbasis\n"
       << listing(basis.basis(), c.list_limit);
    emit(c, os.str());
  }
  return kOk;
}

int cmd_structure(const RunConfig& c) {
  Model m = build_model(c);
  std::optional<IsoExpression> claim;
  if (!c.claim.empty()) {
    claim = IsoExpression::parse(c.claim);
  } else if (m.family) {
    try {
      claim = predict(*m.family, m.topology, m.n);
    } catch (const OutOfRange&) {
    }
  }
  auto rep = analyze(m.generators, m.frustration, claim, close_options(c));
  if (c.format == "json") {
    emit(c, dump(to_json(rep)));
  } else if (c.format == "csv") {
    std::ostringstream os;
    os << "n,dim,center,stabilizer_order,component_sizes,frustration_verdict,iso_claim\n";
    os << rep.n << ',' << rep.dimension << ",\"" << join(rep.center) << "\"," << static_cast<double>(rep.stabilizer.order())
       << ",\"";
    for (size_t i = 0; i < rep.component_sizes.size(); ++i) os << (i ? " " : "") << rep.component_sizes[i];
    os << "\"," << (rep.frustration_verdict ? rep.frustration_verdict->str() : "") << ','
       << (rep.iso_claim ? rep.iso_claim->str() : "") << '\n';
    emit(c, os.str());
  } else {
    std::ostringstream os;
    os << "n " << rep.n << "\ndim " << rep.dimension << "\ncenter " << (rep.center.empty() ? std::string("none") : join(rep.center)) << "\nstabilizer order "
       << static_cast<double>(rep.stabilizer.order()) << "\nstabilizer generators " << join(rep.stabilizer.generator_basis)
       << "\ncomponents";
    for (auto s : rep.component_sizes) os << ' ' << s;
    os << "\nfrustration " << (rep.frustration_verdict ? rep.frustration_verdict->str() : "none") << '\n';
    if (rep.iso_claim) {
      os << "claim " << rep.iso_claim->str() << " dim_ok " << rep.iso_checks->dim_ok << " center_ok "
         << rep.iso_checks->center_ok << " component_consistent " << rep.iso_checks->component_consistent << '\n';
    }
    emit(c, os.str());
  }
  if (rep.iso_checks && !(rep.iso_checks->dim_ok && rep.iso_checks->center_ok)) return kMismatch;
  return kOk;
}

int cmd_scan(const RunConfig& c) {
  if (!c.orbit_of.empty()) {
    auto gens = parse_list(c.orbit_of);
    if (gens.empty() || gens.front().n() != 2) throw UsageError("--orbit-of takes two-site strings");
    auto rec = canonicalize(close(gens).basis());
    if (c.format == "json") {
      emit(c, dump(to_json(rec)));
    } else {
      Inventory one;
      one.orbits.push_back(rec);
      emit(c, to_csv(one));
    }
    return kOk;
  }
  Inventory inv = scan_power_sets();
  if (c.format == "json") {
    emit(c, dump(to_json(inv)));
  } else if (c.format == "csv") {
    emit(c, to_csv(inv));
  } else {
    std::ostringstream os;
    os << "subalgebras " << inv.total() << " (a " << inv.a_count << ", b " << inv.b_count << ", c " << inv.c_count
       << ")\norbits " << inv.orbits.size() << "\nflagged " << inv.flagged.size() << '\n';
    for (const auto& o : inv.orbits)
      os << (o.matched_family ? o.matched_family->label() : "?") << "  dim " << o.dimension() << "  orbit "
         << o.orbit_size << "  stab " << o.stabilizer_order << "  s p e d " << o.invariants.s << ' ' << o.invariants.p << ' '
         << o.invariants.e << ' ' << o.invariants.d << "  " << join(o.canonical_basis) << '\n';
    emit(c, os.str());
  }
  return kOk;
}

int cmd_classify(const RunConfig& c) {
  SweepConfig cfg;
  Range r = c.n_text.empty() ? Range{3, 8} : parse_range(c.n_text);
  if (r.lo < 3) throw UsageError("classify needs n >= 3");
  if (r.hi > 13) throw UsageError("classify supports n <= 13");
  cfg.n_min = r.lo;
  cfg.n_max = r.hi;
  cfg.topologies = {parse_topology(c.topology)};
  if (!c.family.empty()) cfg.families = {FamilyId::parse(c.family)};
  cfg.close_options = close_options(c);
  auto rows = classify_sweep(cfg);
  if (c.format == "json") {
    emit(c, dump(to_json(rows)));
  } else if (c.format == "csv") {
    emit(c, to_csv(rows));
  } else {
    std::ostringstream os;
    for (const auto& row : rows) {
      os << row.family.label() << ' ' << to_string(row.topology) << " n=" << row.n << " dim " << row.computed_dim;
      if (row.predicted_dim) os << " predicted " << *row.predicted_dim << " (" << row.predicted_expr << ')';
      os << ' ' << to_string(row.verdict) << '\n';
    }
    emit(c, os.str());
  }
  if (any_mismatch(rows)) return kMismatch;
  for (const auto& row : rows)
    if (row.verdict == Verdict::capped) return kCap;
  return kOk;
}

int cmd_catalog(const RunConfig& c) {
  emit(c, dump(catalog_json()));
  return kOk;
}

unsigned default_threads() {
  if (const char* env = std::getenv("DLA_THREADS")) {
    try {
      return parse_uint(env);
    } catch (const UsageError&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-string dynamical Lie algebra toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = default_threads();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--generators", cfg.generators, "comma-separated Pauli strings");
    sub->add_option("--family", cfg.family, "catalog label a0..a22, b0..b4, c0..c7");
    sub->add_option("--n", cfg.n_text, "number of sites");
    sub->add_option("--topology", cfg.topology)->check(CLI::IsMember({"open", "periodic", "permutation"}));
    sub->add_option("--threads", cfg.threads, "worker threads, 0 for all cores (env DLA_THREADS)");
    sub->add_option("--max-seconds", cfg.max_seconds);
    sub->add_option("--max-elements", cfg.max_elements);
    add_common(sub);
  };

  auto* close_cmd = app.add_subcommand("close", "closure basis of a generator set");
  add_model(close_cmd);
  close_cmd->add_option("--list-limit", cfg.list_limit, "text output lists at most this many strings");

  auto* structure_cmd = app.add_subcommand("structure", "stabilizer, center, components and frustration graph");
  add_model(structure_cmd);
  structure_cmd->add_option("--claim", cfg.claim, "isomorphism claim such as \"so(8)^2 + u1\"");

  auto* scan_cmd = app.add_subcommand("scan", "all subalgebras of su(4) spanned by Pauli strings");
  add_common(scan_cmd);
  scan_cmd->add_option("--orbit-of", cfg.orbit_of, "report only the orbit of this generator set");

  auto* classify_cmd = app.add_subcommand("classify", "compare closures against the closed-form predictions");
  add_model(classify_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "print the catalog of two-site generator sets");
  add_common(catalog_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*close_cmd) return cmd_close(cfg);
    if (*structure_cmd) return cmd_structure(cfg);
    if (*scan_cmd) return cmd_scan(cfg);
    if (*classify_cmd) return cmd_classify(cfg);
    if (*catalog_cmd) return cmd_catalog(cfg);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
