#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dla/pauli.hpp"

namespace dla {

enum class Kind { a, b, c };

struct FamilyId {
  Kind kind = Kind::a;
  int index = 0;

  std::string label() const;
  static FamilyId parse(std::string_view text);
  friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

enum class Topology { open, periodic, permutation };

std::string to_string(Topology t);
Topology parse_topology(std::string_view text);

struct ModelSpec {
  FamilyId family;
  unsigned n = 2;
  Topology topology = Topology::open;
  std::vector<PauliString> two_site_generators;
};

std::vector<FamilyId> all_families();
// a and b families; c-type models are left out of the chain classification.
std::vector<FamilyId> chain_families();

std::vector<PauliString> catalog_generators(FamilyId family);
// Generating sets whose frustration graphs are paths or cycles. Differs from
// the minimal set only for a8 = Lie<XX, IY> and a14 = Lie<XX, ZI, IZ>.
std::vector<PauliString> frustration_generators(FamilyId family);

std::vector<PauliString> extend_open(std::span<const PauliString> gens2, unsigned n);
std::vector<PauliString> extend_periodic(std::span<const PauliString> gens2, unsigned n);
std::vector<PauliString> extend_permutation(std::span<const PauliString> gens2, unsigned n);
std::vector<PauliString> extend(std::span<const PauliString> gens2, unsigned n, Topology t);

ModelSpec make_model(FamilyId family, unsigned n, Topology t);
std::vector<PauliString> model_generators(const ModelSpec& spec);

// Letter codes follow the bit layout: I=0, X=1, Z=2, Y=3.
using LetterPerm = std::array<uint8_t, 4>;

LetterPerm letter_perm(std::string_view images_of_xyz);  // e.g. "YXZ" swaps X and Y
LetterPerm compose(const LetterPerm& outer, const LetterPerm& inner);

class SiteLetterMap {
 public:
  explicit SiteLetterMap(std::vector<LetterPerm> per_site) : perms_(std::move(per_site)) {}

  static SiteLetterMap identity(unsigned n);
  static SiteLetterMap psi(unsigned n);    // X<->Y on sites 2, 4, ...
  static SiteLetterMap phi(unsigned n);    // Y<->Z on sites 2, 4, ...
  static SiteLetterMap gamma(unsigned n);  // cycle X->Z->Y->X to the power j on site j

  unsigned n() const { return static_cast<unsigned>(perms_.size()); }
  PauliString apply(const PauliString& p) const;
  std::vector<PauliString> apply(std::span<const PauliString> ps) const;

 private:
  std::vector<LetterPerm> perms_;
};

nlohmann::json catalog_json();

}  // namespace dla
