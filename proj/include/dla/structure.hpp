#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dla/closure.hpp"
#include "dla/pauli.hpp"

namespace dla {

// Subgroup (up to phase) of Pauli strings given by a GF(2) basis.
struct StabilizerSet {
  unsigned n = 0;
  std::vector<PauliString> generator_basis;
  std::vector<PauliString> elements;  // sorted, includes identity; empty if rank too large
  unsigned rank() const { return static_cast<unsigned>(generator_basis.size()); }
  long double order() const;
  bool enumerated() const { return !elements.empty(); }
  bool contains(const PauliString& p) const;
};

constexpr unsigned kEnumerateRank = 16;

StabilizerSet stabilizer(std::span<const PauliString> strings);
// Elements of the group that commute with the whole group.
StabilizerSet stabilizer_center(const StabilizerSet& st);
StabilizerSet group_from_basis(unsigned n, std::vector<PauliString> basis);

std::vector<PauliString> center_strings(const DlaBasis& basis);
std::vector<PauliString> center_strings(std::span<const PauliString> sorted_basis);

// |{P != id commuting with St}| - |Z(St) \ {id}|
uint64_t centralizer_dimension(const StabilizerSet& st, const StabilizerSet& center_of_st);
// The strings counted above.
std::vector<PauliString> centralizer_space(const StabilizerSet& st, const StabilizerSet& center_of_st);

// theta(g) = -Q g^T Q
struct Involution {
  PauliString q;
  // theta(P) = sign(P) * P
  int sign(const PauliString& p) const;
  bool fixes(const PauliString& p) const { return sign(p) == 1; }
};

size_t involution_fixed_dimension(std::span<const PauliString> space, const Involution& inv);

class IsoError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IsoTerm {
  enum class Type { u1, su, so, sp };
  Type type = Type::u1;
  uint64_t N = 1;
  unsigned multiplicity = 1;

  uint64_t dimension() const;  // of one copy
  friend auto operator<=>(const IsoTerm&, const IsoTerm&) = default;
};

class IsoExpression {
 public:
  IsoExpression() = default;
  explicit IsoExpression(std::vector<IsoTerm> terms);

  static IsoExpression parse(std::string_view text);
  static IsoExpression u1(unsigned count) { return IsoExpression({{IsoTerm::Type::u1, 1, count}}); }
  static IsoExpression su(uint64_t N, unsigned mult = 1) { return IsoExpression({{IsoTerm::Type::su, N, mult}}); }
  static IsoExpression so(uint64_t N, unsigned mult = 1) { return IsoExpression({{IsoTerm::Type::so, N, mult}}); }
  static IsoExpression sp(uint64_t N, unsigned mult = 1) { return IsoExpression({{IsoTerm::Type::sp, N, mult}}); }

  IsoExpression operator+(const IsoExpression& other) const;

  const std::vector<IsoTerm>& terms() const { return terms_; }
  uint64_t dimension() const;
  unsigned u1_count() const;
  // dimensions of the non-abelian summands, one entry per copy
  std::vector<uint64_t> simple_dimensions() const;
  std::string str() const;
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const IsoExpression&, const IsoExpression&) = default;

 private:
  std::vector<IsoTerm> terms_;
};

struct FrustrationGraph {
  std::vector<PauliString> vertices;
  std::vector<std::vector<size_t>> adjacency;
  size_t edge_count() const;
};

FrustrationGraph frustration_graph(std::span<const PauliString> generators);
// Each component must be a path (so(N+1)) or a cycle. A cycle whose string
// product is the identity yields so(N), otherwise so(N) + so(N).
std::optional<IsoExpression> recognize_path_or_cycle(const FrustrationGraph& g);

std::vector<std::vector<PauliString>> ideal_components(const DlaBasis& basis);
std::vector<std::vector<PauliString>> ideal_components(std::span<const PauliString> sorted_basis);

struct IsoReport {
  bool dim_ok = false;
  bool center_ok = false;
  bool component_consistent = false;
  bool all() const { return dim_ok && center_ok && component_consistent; }
};

IsoReport verify_iso(const DlaBasis& basis, const IsoExpression& claim);
IsoReport verify_iso(size_t dimension, size_t center_count, std::span<const size_t> component_sizes,
                     const IsoExpression& claim);

}  // namespace dla
