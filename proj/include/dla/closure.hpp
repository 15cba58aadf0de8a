#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "dla/pauli.hpp"

namespace dla {

struct CloseOptions {
  unsigned threads = 1;        // 0 picks hardware concurrency
  size_t max_elements = 0;     // 0 means unlimited
  double max_seconds = 0.0;    // 0 means unlimited
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DlaBasis {
 public:
  DlaBasis() = default;
  DlaBasis(unsigned n, std::vector<PauliString> sorted_basis, size_t generator_count)
      : n_(n), basis_(std::move(sorted_basis)), generator_count_(generator_count) {}

  unsigned n() const { return n_; }
  const std::vector<PauliString>& basis() const { return basis_; }
  size_t dimension() const { return basis_.size(); }
  size_t generator_count() const { return generator_count_; }
  bool contains(const PauliString& p) const;

 private:
  unsigned n_ = 0;
  std::vector<PauliString> basis_;
  size_t generator_count_ = 0;
};

DlaBasis close(std::span<const PauliString> generators, const CloseOptions& opts = {});
bool is_member(const DlaBasis& basis, const PauliString& p);

// Literal pairwise check, used post hoc.
bool is_closed(std::span<const PauliString> sorted_strings);

}  // namespace dla
