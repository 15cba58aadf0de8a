#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dla/catalog.hpp"
#include "dla/pauli.hpp"

namespace dla {

struct Invariants {
  int s = 0;  // single Paulis
  int p = 0;  // letters A with both AI and IA
  int e = 0;  // equal doubles AA
  int d = 0;  // different doubles AB
  friend bool operator==(const Invariants&, const Invariants&) = default;
  friend auto operator<=>(const Invariants&, const Invariants&) = default;
};

// One element of S3 x Z2 acting on two-site strings.
struct GroupElement {
  LetterPerm perm;
  bool swap = false;

  PauliString apply(const PauliString& p) const;
  std::vector<PauliString> apply(std::span<const PauliString> set) const;
};

struct OrbitRecord {
  std::vector<PauliString> canonical_basis;
  Invariants invariants;
  int orbit_size = 0;
  int stabilizer_order = 0;
  std::optional<FamilyId> matched_family;
  Kind type = Kind::a;
  size_t dimension() const { return canonical_basis.size(); }
};

struct Subalgebra {
  std::vector<PauliString> basis;
  Kind type = Kind::a;
};

struct Inventory {
  int a_count = 0;
  int b_count = 0;
  int c_count = 0;
  std::vector<Subalgebra> subalgebras;
  std::vector<OrbitRecord> orbits;
  // orbits whose members did not all receive the same type
  std::vector<size_t> flagged;
  size_t total() const { return subalgebras.size(); }
};

std::vector<GroupElement> group_elements();
Invariants invariants(std::span<const PauliString> basis);
OrbitRecord canonicalize(std::span<const PauliString> basis);
Kind subalgebra_type(std::span<const PauliString> basis);
Inventory scan_power_sets();

}  // namespace dla
