#include "brauer/cells.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace brauer {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("cell data: " + what);
}

// Subgroup closure as a sorted id list.
std::vector<int32_t> subgroup_closure(const GroupTable& w, std::vector<int32_t> gens) {
  std::vector<char> seen(w.order(), 0);
  std::vector<int32_t> out{0};
  seen[0] = 1;
  for (size_t head = 0; head < out.size(); ++head)
    for (int32_t s : gens) {
      int32_t nxt = w.compose(out[head], s);
      if (!seen[nxt]) {
        seen[nxt] = 1;
        out.push_back(nxt);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int32_t CellData::h_part(int32_t n) const {
  if (in_subH[n]) return n;
  int32_t m = w->lmul_gen(0, n);  // strip the r1 factor
  if (!in_subH[m]) throw std::logic_error("N1 element without r1^a * h decomposition");
  return m;
}

CellData CellData::build(const RootSystem& rs, const GroupTable& w,
                         const AdmissibleTables& adm, Variant variant) {
  CellData c;
  c.rs = &rs;
  c.w = &w;
  c.adm = &adm;
  c.variant = variant;
  const int k = rs.rank();
  check(k == 3 || k == 4, "cell data is defined for H3/H4 only");
  check(variant == Variant::standard || k == 4, "chen variant needs H4");

  for (int g = 0; g < k; ++g) {
    std::vector<uint8_t> wd{static_cast<uint8_t>(g)};
    c.gen_elem.push_back(w.element_from_word(wd));
  }
  c.beta5 = beta5_index(rs);
  c.r5_elem = w.index_of(reflection_perm(rs, c.beta5));
  check(c.r5_elem >= 0, "r5 missing from the table");

  c.canonical_basis = {static_cast<int16_t>(rs.simple(0)), static_cast<int16_t>(rs.simple(2)),
                       static_cast<int16_t>(c.beta5)};
  if (k == 4) {
    c.beta7 = beta7_index(rs);
    c.canonical_basis.push_back(static_cast<int16_t>(c.beta7));
  }
  std::sort(c.canonical_basis.begin(), c.canonical_basis.end());
  check(adm.basis_index(c.canonical_basis) >= 0, "canonical basis is not a basis");

  // N1: brute stabilizer of beta1 up to sign; must agree with <r1,r3,r5>.
  const int b1 = rs.simple(0);
  c.in_n1.assign(w.order(), 0);
  c.root_of_elem.resize(w.order());
  for (int g = 0; g < w.order(); ++g) {
    c.root_of_elem[g] = w.act_pos(g, b1);
    if (c.root_of_elem[g] == b1) {
      c.in_n1[g] = 1;
      c.n1.push_back(g);
    }
  }
  {
    std::vector<int32_t> gens{c.gen_elem[0], c.gen_elem[2], c.r5_elem};
    if (k == 4) gens.push_back(c.gen_elem[3]);
    check(subgroup_closure(w, gens) == c.n1, "N1 != <r1, r3, (r4,) r5>");
  }
  check(static_cast<int>(c.n1.size()) == (k == 3 ? 8 : 240), "N1 cardinality");

  // subH and the middle transversal.
  {
    std::vector<int32_t> gens{c.gen_elem[2], c.r5_elem};
    if (k == 4) gens.push_back(c.gen_elem[3]);
    c.subH = subgroup_closure(w, gens);
  }
  c.in_subH.assign(w.order(), 0);
  for (int32_t h : c.subH) c.in_subH[h] = 1;
  check(static_cast<int>(c.subH.size()) == (k == 3 ? 4 : 120), "subH cardinality");

  if (k == 4) c.z_elem = central_z(w);
  c.c1rep_of.assign(w.order(), -1);
  c.is_c1.assign(w.order(), 0);
  if (variant == Variant::chen || k == 3) {
    c.c1 = c.subH;
    for (int32_t h : c.subH) c.c1rep_of[h] = h;
  } else {
    for (int32_t h : c.subH) {
      int32_t rep = std::min(h, w.compose(h, c.z_elem));
      c.c1rep_of[h] = rep;
    }
    for (int32_t h : c.subH)
      if (c.c1rep_of[h] == h) c.c1.push_back(h);
  }
  for (int32_t h : c.c1) c.is_c1[h] = 1;
  check(static_cast<int>(c.c1.size()) ==
            (k == 3 ? 4 : variant == Variant::chen ? 120 : 60),
        "C1 cardinality");

  // D1: cosets of N1 correspond to the positive roots via g |-> pos(g b1);
  // the canonical rep is the BFS-least element hitting each root.
  c.d1_for_root.assign(rs.size(), -1);
  for (int g = 0; g < w.order(); ++g)
    if (c.d1_for_root[c.root_of_elem[g]] < 0) {
      c.d1_for_root[c.root_of_elem[g]] = g;
      c.d1.push_back(g);
    }
  for (int r = 0; r < rs.size(); ++r) check(c.d1_for_root[r] >= 0, "D1 misses a root");
  c.is_d1.assign(w.order(), 0);
  for (int32_t g : c.d1) c.is_d1[g] = 1;
  check(static_cast<int>(c.d1.size()) == rs.size(), "D1 cardinality");

  // N2 / D2 via the basis orbit of the canonical basis.
  c.basis_of_elem.assign(w.order(), -1);
  c.in_n2.assign(w.order(), 0);
  const int canon_id = adm.basis_index(c.canonical_basis);
  c.d2_for_basis.assign(adm.bases().size(), -1);
  for (int g = 0; g < w.order(); ++g) {
    OrthoSet img = act_set(w, g, c.canonical_basis);
    int id = adm.basis_index(img);
    check(id >= 0, "group element maps the canonical basis off the basis list");
    c.basis_of_elem[g] = id;
    if (id == canon_id) {
      c.in_n2[g] = 1;
      c.n2.push_back(g);
    }
    if (c.d2_for_basis[id] < 0) {
      c.d2_for_basis[id] = g;
      c.d2.push_back(g);
    }
  }
  for (size_t b = 0; b < adm.bases().size(); ++b)
    check(c.d2_for_basis[b] >= 0, "D2 misses a basis");
  c.is_d2.assign(w.order(), 0);
  for (int32_t g : c.d2) c.is_d2[g] = 1;

  check(static_cast<int>(c.n2.size()) == (k == 3 ? 24 : 192), "N2 cardinality");
  check(static_cast<int>(c.d2.size()) == (k == 3 ? 5 : 75), "D2 cardinality");
  check(static_cast<int>(c.d1.size()) == (k == 3 ? 15 : 60), "D1 cardinality");

  // Every N1 element must split as r1^a * z^b * c with c in the transversal.
  for (int32_t n : c.n1) {
    int32_t h = c.h_part(n);
    check(c.c1rep_of[h] >= 0, "N1 element with no middle reduction");
  }
  return c;
}

}  // namespace brauer
