#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dla/classify.hpp"
#include "dla/orbits.hpp"
#include "dla/structure.hpp"

namespace dla {

struct StructureReport {
  unsigned n = 0;
  size_t dimension = 0;
  std::vector<PauliString> center;
  StabilizerSet stabilizer;
  std::vector<size_t> component_sizes;
  std::optional<IsoExpression> frustration_verdict;
  std::optional<IsoExpression> iso_claim;
  std::optional<IsoReport> iso_checks;
};

StructureReport analyze(std::span<const PauliString> generators, std::span<const PauliString> frustration_generators,
                        const std::optional<IsoExpression>& claim, const CloseOptions& opts = {});

nlohmann::json to_json(const DlaBasis& basis, double seconds);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const ClassificationRow& row);
nlohmann::json to_json(std::span<const ClassificationRow> rows);
nlohmann::json to_json(const Inventory& inv);
nlohmann::json to_json(const OrbitRecord& rec);

std::string to_csv(std::span<const ClassificationRow> rows);
std::string to_csv(const Inventory& inv);

}  // namespace dla
