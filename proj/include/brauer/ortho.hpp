#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "brauer/group.hpp"
#include "brauer/root_system.hpp"

namespace brauer {

// A sorted set of mutually orthogonal positive-root indices.
using OrthoSet = std::vector<int16_t>;

bool is_orthogonal_set(const RootSystem& rs, const OrthoSet& b);

// Orthogonality machinery for H3/H4: every orthogonal basis, the
// closure map, and the admissible-set list (empty set, singletons,
// bases).  Built once per system and then read-only.
class AdmissibleTables {
 public:
  static AdmissibleTables build(const RootSystem& rs);

  const RootSystem& roots() const { return *rs_; }
  const std::vector<OrthoSet>& bases() const { return bases_; }
  int basis_index(const OrthoSet& b) const;  // -1 if not a basis
  const std::vector<std::vector<int>>& bases_through_root() const { return through_root_; }

  // |B| <= 1, or B is an orthogonal basis.
  bool is_admissible(const OrthoSet& b) const;

  // Minimal admissible superset; identity on admissible sets.  For |B| >= 2
  // this is the unique orthogonal basis containing B.
  OrthoSet closure(const OrthoSet& b) const;

  int closure_delta_exponent(const OrthoSet& b) const {
    return 2 * static_cast<int>(closure(b).size() - b.size());
  }

  // The unique basis through an orthogonal pair (also valid for H3).
  int basis_of_pair(int r1, int r2) const;

  // All admissible sets: empty, singletons, bases (in that order).
  const std::vector<OrthoSet>& admissible_sets() const { return admissible_; }

  struct Census {
    int bases = 0;
    int through_root_min = 0, through_root_max = 0;
    bool pair_unique = false;  // exactly one basis through every orthogonal pair
    int admissible_total = 0;
  };
  Census census() const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<OrthoSet> bases_;
  std::vector<std::vector<int>> through_root_;
  std::map<std::pair<int, int>, int> pair_basis_;
  std::vector<OrthoSet> admissible_;
};

// Positive image of an orthogonal set under a group element.
OrthoSet act_set(const GroupTable& w, int g, const OrthoSet& b);

}  // namespace brauer
