#include "dla/classify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace dla {

namespace {

using E = IsoExpression;

uint64_t p2(unsigned k) { return 1ull << k; }

bool is_a(FamilyId f, std::initializer_list<int> ks) {
  return f.kind == Kind::a && std::find(ks.begin(), ks.end(), f.index) != ks.end();
}
bool is_b(FamilyId f, std::initializer_list<int> ks) {
  return f.kind == Kind::b && std::find(ks.begin(), ks.end(), f.index) != ks.end();
}

E heisenberg_like(unsigned n) {  // a6, a7, a10 on the open chain
  return n % 2 ? E::su(p2(n - 1)) : E::su(p2(n - 2), 4);
}

E a3_open(unsigned n) {
  switch (n % 8) {
    case 0: return E::so(p2(n - 2), 4);
    case 1: case 7: return E::so(p2(n - 1));
    case 2: case 6: return E::su(p2(n - 2), 2);
    case 3: case 5: return E::sp(p2(n - 2));
    default: return E::sp(p2(n - 3), 4);
  }
}

E a5_open(unsigned n) {
  switch (n % 6) {
    case 0: return E::so(p2(n - 2), 4);
    case 1: case 5: return E::so(p2(n - 1));
    case 2: case 4: return E::su(p2(n - 2), 2);
    default: return E::sp(p2(n - 2));
  }
}

E predict_open(FamilyId f, unsigned n) {
  if (f.kind == Kind::a) {
    switch (f.index) {
      case 0: return E::u1(n - 1);
      case 1: return E::so(n);
      case 2: case 4: return E::so(n, 2);
      case 3: return a3_open(n);
      case 5: return a5_open(n);
      case 6: case 7: case 10: return heisenberg_like(n);
      case 8: return E::so(2 * n - 1);
      case 9: return E::sp(p2(n - 2));
      case 11: case 16: return E::so(p2(n));
      case 12: case 17: case 18: case 19: case 21: case 22: return E::su(p2(n));
      case 13: case 15: case 20: return E::su(p2(n - 1), 2);
      case 14: return E::so(2 * n);
    }
  } else if (f.kind == Kind::b) {
    switch (f.index) {
      case 0: return E::u1(n);
      case 1: return E::u1(2 * n - 1);
      case 2: return E::sp(p2(n - 2)) + E::u1(1);
      case 3: return E::su(2, n);
      case 4: return E::su(p2(n - 1), 2) + E::u1(1);
    }
  }
  throw OutOfRange("no rule for " + f.label());
}

E predict_periodic(FamilyId f, unsigned n) {
  if (f.kind == Kind::a) {
    switch (f.index) {
      case 0: return E::u1(n);
      case 1: return E::so(n, 2);
      case 2: return E::so(n, 4);
      case 3:
        if (n % 2) return E::su(p2(n - 1), 2);
        if (n % 8 == 0) return E::so(p2(n - 2), 4);
        if (n % 8 == 4) return E::sp(p2(n - 3), 4);
        return E::su(p2(n - 2), 4);
      case 4: return n % 2 ? E::so(2 * n) : E::so(n, 4);
      case 5:
        if (n % 3) return E::so(p2(n));
        return n % 6 == 0 ? E::so(p2(n - 2), 4) : E::sp(p2(n - 2));
      case 6: return n % 2 ? E::su(p2(n - 1), 2) : E::su(p2(n - 2), 4);
      case 7: case 13: case 16: case 20: return predict_open(f, n);
      case 8: case 14: return E::so(2 * n, 2);
      case 9: case 11: return E::so(p2(n));
      case 10:
        if (n % 3) return E::su(p2(n));
        return n % 6 == 0 ? E::su(p2(n - 2), 4) : E::su(p2(n - 1));
      case 12: case 15: case 17: case 18: case 19: case 21: case 22: return E::su(p2(n));
    }
  } else if (f.kind == Kind::b) {
    switch (f.index) {
      case 0: return E::u1(n);
      case 1: return E::u1(2 * n);
      case 2: return E::so(p2(n));
      case 3: return E::su(2, n);
      case 4: return E::su(p2(n));
    }
  }
  throw OutOfRange("no rule for " + f.label());
}

E predict_permutation(FamilyId f, unsigned n) {
  if (f.kind == Kind::a) {
    switch (f.index) {
      case 0: return E::u1(n * (n - 1) / 2);
      case 1: case 2: return E::so(p2(n - 1), 2);
      case 3: case 6: case 8: case 13: case 14: case 20: return E::su(p2(n - 1), 2);
      case 4: case 7: return heisenberg_like(n);
      case 5: case 9: case 11: case 16: return E::so(p2(n));
      case 10: case 12: case 15: case 17: case 18: case 19: case 21: case 22: return E::su(p2(n));
    }
  } else if (f.kind == Kind::b) {
    switch (f.index) {
      case 0: return E::u1(n);
      case 1: return E::u1(n * (n + 1) / 2);
      case 2: return E::so(p2(n));
      case 3: return E::su(2, n);
      case 4: return E::su(p2(n));
    }
  }
  throw OutOfRange("no rule for " + f.label());
}

}  // namespace

bool has_prediction(FamilyId family, Topology) { return family.kind != Kind::c; }

unsigned prediction_floor(FamilyId f, Topology t) {
  switch (t) {
    case Topology::open:
      if (is_a(f, {11, 12, 16, 17, 18, 19, 21, 22})) return 4;
      return 3;
    case Topology::periodic:
      if (is_a(f, {9, 11, 16}) || is_b(f, {2})) return 4;
      return 3;
    case Topology::permutation:
      if (is_a(f, {5, 9, 10, 11, 12, 15, 16, 17, 18, 19, 21, 22}) || is_b(f, {2, 4})) return 4;
      return 3;
  }
  return 3;
}

IsoExpression predict(FamilyId family, Topology t, unsigned n) {
  if (!has_prediction(family, t)) throw OutOfRange("no rule for " + family.label());
  if (n < prediction_floor(family, t))
    throw OutOfRange(family.label() + " " + to_string(t) + " rule needs n >= " +
                     std::to_string(prediction_floor(family, t)));
  switch (t) {
    case Topology::open: return predict_open(family, n);
    case Topology::periodic: return predict_periodic(family, n);
    case Topology::permutation: return predict_permutation(family, n);
  }
  throw OutOfRange("unknown topology");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::out_of_range: return "out_of_range";
    case Verdict::capped: return "capped";
  }
  return "?";
}

ClassificationRow classify_one(const ModelSpec& spec, const CloseOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  ClassificationRow row;
  row.family = spec.family;
  row.topology = spec.topology;
  row.n = spec.n;
  std::optional<IsoExpression> claim;
  try {
    claim = predict(spec.family, spec.topology, spec.n);
    row.predicted_expr = claim->str();
    row.predicted_dim = claim->dimension();
  } catch (const OutOfRange& e) {
    row.note = e.what();
  }
  try {
    auto basis = close(model_generators(spec), opts);
    row.computed_dim = basis.dimension();
    row.center_dim = center_strings(basis).size();
    for (const auto& c : ideal_components(basis)) row.component_sizes.push_back(c.size());
    std::sort(row.component_sizes.begin(), row.component_sizes.end(), std::greater<>());
    if (claim) {
      auto rep = verify_iso(row.computed_dim, row.center_dim, row.component_sizes, *claim);
      row.component_consistent = rep.component_consistent;
      row.verdict = rep.dim_ok && rep.center_ok ? Verdict::match : Verdict::mismatch;
    } else {
      row.verdict = Verdict::out_of_range;
    }
  } catch (const CapExceeded& e) {
    row.verdict = Verdict::capped;
    row.note = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::vector<ClassificationRow> classify_sweep(const SweepConfig& cfg) {
  if (cfg.n_min < 3) throw std::invalid_argument("sweep needs n_min >= 3");
  if (cfg.n_max < cfg.n_min) throw std::invalid_argument("sweep needs n_max >= n_min");
  if (cfg.n_max > 13) throw std::invalid_argument("sweep supports n <= 13");
  std::vector<ClassificationRow> rows;
  for (Topology t : cfg.topologies)
    for (FamilyId f : cfg.families)
      for (unsigned n = cfg.n_min; n <= cfg.n_max; ++n) rows.push_back(classify_one(make_model(f, n, t), cfg.close_options));
  std::sort(rows.begin(), rows.end(), [](const ClassificationRow& a, const ClassificationRow& b) {
    if (a.topology != b.topology) return a.topology < b.topology;
    if (a.family != b.family) return a.family < b.family;
    return a.n < b.n;
  });
  return rows;
}

bool any_mismatch(std::span<const ClassificationRow> rows) {
  return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.verdict == Verdict::mismatch; });
}

std::string to_string(ScalingClass c) {
  switch (c) {
    case ScalingClass::linear: return "linear";
    case ScalingClass::quadratic: return "quadratic";
    case ScalingClass::exponential: return "exponential";
  }
  return "?";
}

// Ratio of the formula's dimensions at n = 20 and n = 10. Linear formulas
// give about 2, quadratic about 4, exponential about 2^20.
ScalingClass scaling_class(FamilyId family, Topology t) {
  const long double lo = static_cast<long double>(predict(family, t, 10).dimension());
  const long double hi = static_cast<long double>(predict(family, t, 20).dimension());
  const long double ratio = hi / lo;
  if (ratio < 3) return ScalingClass::linear;
  if (ratio < 8) return ScalingClass::quadratic;
  return ScalingClass::exponential;
}

ScalingClass scaling_class(std::span<const ClassificationRow> rows) {
  if (rows.size() < 3) throw std::invalid_argument("scaling class needs at least three rows");
  const auto& first = rows.front();
  for (const auto& r : rows)
    if (r.family != first.family || r.topology != first.topology)
      throw std::invalid_argument("scaling class rows must share family and topology");
  return scaling_class(first.family, first.topology);
}

}  // namespace dla
