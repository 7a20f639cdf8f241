#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/golden.hpp"

namespace brauer {

using Coeffs = std::vector<Golden>;

// Positive roots of a finite system in simple-root coordinates.  The Gram
// matrix carries all metric data, so everything stays exact in Z[phi]
// (integral for the simply laced systems).  The table is ordered by height
// and then lexicographically by coefficients, which pins down every
// root index used downstream.
//
// Signed indices: a root is referred to as +(i+1) or -(i+1) where i is a
// table index; the sign tracks positivity folding.
class RootSystem {
 public:
  static RootSystem build(const DiagramSpec& spec);

  const DiagramSpec& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank; }
  int size() const { return static_cast<int>(roots_.size()); }

  const Coeffs& root(int idx) const { return roots_[idx]; }
  // Table index of the i-th simple root, i in [0, rank).
  int simple(int i) const { return simple_idx_[i]; }

  Golden inner(const Coeffs& x, const Coeffs& y) const;
  Golden inner_idx(int i, int j) const { return inner(roots_[i], roots_[j]); }

  // x - (x, mirror) mirror; mirror must have norm 2.
  Coeffs reflect(const Coeffs& mirror, const Coeffs& x) const;

  // Positive representative and sign of v; throws if v is not a root.
  std::pair<int, int> to_positive(const Coeffs& v) const;

  // Table index of a positive root vector, or -1.
  int find(const Coeffs& v) const;

  // Signed-index reflection: image of root `signed_root` under the
  // reflection in table root `mirror_idx`.
  int reflect_idx(int mirror_idx, int signed_root) const;

  Golden height(int idx) const;

 private:
  DiagramSpec diagram_;
  std::vector<std::vector<Golden>> gram_;
  std::vector<Coeffs> roots_;
  std::vector<int> simple_idx_;
  std::unordered_map<size_t, std::vector<int>> index_;  // hash bucket -> idx

  static size_t coeff_hash(const Coeffs& v);
  void index_roots();
};

}  // namespace brauer
