#pragma once

#include <memory>
#include <vector>

#include "brauer/ortho.hpp"

namespace brauer {

enum class Variant { standard, chen };

// Stabilizers, transversals and coset data underlying the three-cell
// normal form:
//   N1 = stabilizer of beta1 (up to sign), D1 = left coset reps of N1,
//   C1 = middle transversal (<r3,r5> for H3; coset reps of <z> in
//        <r3,r4,r5> for H4, or all of <r3,r4,r5> in the chen variant),
//   N2 = setwise stabilizer of the canonical basis, D2 = its coset reps.
// Representatives are canonical: least element id in BFS (length-lex)
// order.  Every cardinality the construction relies on is checked here
// and a mismatch aborts with a diagnostic.
struct CellData {
  const RootSystem* rs = nullptr;
  const GroupTable* w = nullptr;
  const AdmissibleTables* adm = nullptr;
  Variant variant = Variant::standard;

  int beta5 = -1;            // root index
  int beta7 = -1;            // root index (H4 only)
  OrthoSet canonical_basis;  // {b1,b3,b5} or {b1,b3,b5,b7}

  std::vector<int32_t> gen_elem;  // element id of each simple reflection
  int r5_elem = -1;
  int z_elem = -1;  // -1 for H3

  std::vector<int32_t> n1;  // ascending element ids
  std::vector<char> in_n1;
  std::vector<int32_t> subH;  // <r3,r5> resp. <r3,r4,r5>
  std::vector<char> in_subH;

  std::vector<int32_t> c1;        // middle transversal, ascending
  std::vector<char> is_c1;        // valid middle-slot values
  std::vector<int32_t> c1rep_of;  // h in subH -> its transversal rep (id map for chen)

  std::vector<int32_t> d1;            // coset reps, ascending
  std::vector<char> is_d1;
  std::vector<int32_t> d1_for_root;   // positive root -> rep of {g : pos(g b1) = root}
  std::vector<int32_t> root_of_elem;  // g -> pos-index of g(b1)

  std::vector<int32_t> n2;
  std::vector<char> in_n2;
  std::vector<int32_t> d2;
  std::vector<char> is_d2;
  std::vector<int32_t> d2_for_basis;   // basis id -> rep
  std::vector<int32_t> basis_of_elem;  // g -> basis id of pos(g . canonical basis)

  // r1^a * h decomposition of n in N1 (h in subH); returns h.
  int32_t h_part(int32_t n) const;
  // Middle-slot reduction: transversal rep for standard, identity for chen.
  int32_t reduce_middle(int32_t h) const { return variant == Variant::chen ? h : c1rep_of[h]; }

  int32_t d1_rep(int32_t g) const { return d1_for_root[root_of_elem[g]]; }
  int32_t d2_rep(int32_t g) const { return d2_for_basis[basis_of_elem[g]]; }

  static CellData build(const RootSystem& rs, const GroupTable& w,
                        const AdmissibleTables& adm, Variant variant);
};

}  // namespace brauer
