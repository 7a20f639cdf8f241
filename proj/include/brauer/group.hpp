#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "brauer/root_system.hpp"

namespace brauer {

// Action on positive roots as a signed permutation: img[i] = +-(j+1) means
// the i-th positive root maps to plus-or-minus the j-th one.
using SignedPerm = std::vector<int16_t>;

struct SignedPermHash {
  size_t operator()(const SignedPerm& p) const noexcept {
    size_t h = 1469598103934665603ULL;
    for (int16_t v : p) {
      h ^= static_cast<size_t>(static_cast<uint16_t>(v));
      h *= 1099511628211ULL;
    }
    return h;
  }
};

SignedPerm identity_perm(int n);
SignedPerm compose_perm(const SignedPerm& g, const SignedPerm& h);  // acts as g after h
SignedPerm inverse_perm(const SignedPerm& g);

// The signed permutation of the reflection in table root `mirror_idx`.
SignedPerm reflection_perm(const RootSystem& rs, int mirror_idx);
std::vector<SignedPerm> simple_reflection_perms(const RootSystem& rs);

// A finite reflection (sub)group enumerated by BFS over right
// multiplication by its generators.  BFS order is (word length,
// lexicographic word), so element ids are monotone in the canonical order
// and the id of an element doubles as its canonical rank.  The guard stops
// runaway enumerations (W(E8) is never materialised).
class GroupTable {
 public:
  static GroupTable enumerate(const RootSystem& rs, std::vector<SignedPerm> gens,
                              size_t guard = 50000);

  const RootSystem& roots() const { return *rs_; }
  int order() const { return static_cast<int>(elems_.size()); }
  int ngens() const { return static_cast<int>(gens_.size()); }

  const SignedPerm& perm(int g) const { return elems_[g]; }
  int index_of(const SignedPerm& p) const;  // -1 if absent
  int inverse(int g) const { return inv_[g]; }
  int length(int g) const { return len_[g]; }

  int compose(int g, int h) const;          // id of g*h
  int rmul_gen(int g, int s) const { return rmul_[static_cast<size_t>(g) * gens_.size() + s]; }
  int lmul_gen(int s, int g) const { return lmul_[static_cast<size_t>(s) * elems_.size() + g]; }

  // Image of signed root under element g.
  int act(int g, int signed_root) const {
    const SignedPerm& p = elems_[g];
    int idx = signed_root > 0 ? signed_root - 1 : -signed_root - 1;
    int img = p[idx];
    return signed_root > 0 ? img : -img;
  }
  // Positive-table index of the image of table root idx.
  int act_pos(int g, int idx) const {
    int img = elems_[g][idx];
    return (img > 0 ? img : -img) - 1;
  }

  // Canonical reduced word of g over the generator indices (BFS-first).
  std::vector<uint8_t> word(int g) const;

  // Fold a word over generator indices into an element id.
  int element_from_word(const std::vector<uint8_t>& w) const;

  friend struct GroupCache;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<SignedPerm> gens_;
  std::vector<SignedPerm> elems_;
  std::unordered_map<SignedPerm, int32_t, SignedPermHash> idx_;
  std::vector<int32_t> inv_;
  std::vector<int32_t> len_;
  std::vector<int32_t> parent_;    // BFS tree
  std::vector<uint8_t> last_gen_;
  std::vector<int32_t> rmul_;
  std::vector<int32_t> lmul_;

  void finish_tables();
};

// Special H-type elements and roots.

// beta5 = phi^2 b1 + 2 phi b2 + phi b3; asserts the reflection-word route
// r2 r1 r2 r1 r3 r2 . b1 lands on the same root.
int beta5_index(const RootSystem& rs);

// The unique positive root of H4 orthogonal to b1, b3, b5 (exhaustive).
int beta7_index(const RootSystem& rs);

// z = (r5 r3 r4)^5 in W(H4) (or in its <r3,r4,r5> copy of W(H3));
// order 2, commutes with r3, r4, r5.  Asserts those facts.
int central_z(const GroupTable& w);

// Left coset representatives of a subgroup given as a sorted id list;
// canonical representative = least element id (BFS order) in each coset.
std::vector<int32_t> coset_reps(const GroupTable& w, const std::vector<int32_t>& subgroup);

}  // namespace brauer
