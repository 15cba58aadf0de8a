#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dla/catalog.hpp"
#include "dla/closure.hpp"
#include "dla/structure.hpp"

namespace dla {

class OutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Smallest n for which the closed-form rule is stated.
unsigned prediction_floor(FamilyId family, Topology t);
bool has_prediction(FamilyId family, Topology t);
// Throws OutOfRange below the floor or for families without a rule.
IsoExpression predict(FamilyId family, Topology t, unsigned n);

enum class Verdict { match, mismatch, out_of_range, capped };
std::string to_string(Verdict v);

struct ClassificationRow {
  FamilyId family;
  Topology topology = Topology::open;
  unsigned n = 0;
  size_t computed_dim = 0;
  std::optional<uint64_t> predicted_dim;
  std::string predicted_expr;
  size_t center_dim = 0;
  std::vector<size_t> component_sizes;
  bool component_consistent = false;
  Verdict verdict = Verdict::out_of_range;
  double seconds = 0.0;
  std::string note;
};

ClassificationRow classify_one(const ModelSpec& spec, const CloseOptions& opts = {});

struct SweepConfig {
  unsigned n_min = 3;
  unsigned n_max = 8;
  std::vector<Topology> topologies{Topology::open};
  std::vector<FamilyId> families = chain_families();
  CloseOptions close_options;
};

std::vector<ClassificationRow> classify_sweep(const SweepConfig& cfg);
bool any_mismatch(std::span<const ClassificationRow> rows);

enum class ScalingClass { linear, quadratic, exponential };
std::string to_string(ScalingClass c);
ScalingClass scaling_class(FamilyId family, Topology t);
ScalingClass scaling_class(std::span<const ClassificationRow> rows);

}  // namespace dla
