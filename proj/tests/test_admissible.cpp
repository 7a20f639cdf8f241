#include <random>

#include "brauer/cells.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

struct Ctx {
  RootSystem rs;
  GroupTable w;
  AdmissibleTables adm;
};

const Ctx& ctx(int rank) {
  static Ctx c3{RootSystem::build(DiagramSpec::h3()), {}, {}};
  static Ctx c4{RootSystem::build(DiagramSpec::h4()), {}, {}};
  static bool once = [] {
    c3.w = GroupTable::enumerate(c3.rs, simple_reflection_perms(c3.rs));
    c3.adm = AdmissibleTables::build(c3.rs);
    c4.w = GroupTable::enumerate(c4.rs, simple_reflection_perms(c4.rs));
    c4.adm = AdmissibleTables::build(c4.rs);
    return true;
  }();
  (void)once;
  return rank == 3 ? c3 : c4;
}

}  // namespace

TEST_CASE("basis censuses") {
  auto c3 = ctx(3).adm.census();
  CHECK(c3.bases == 5);
  CHECK(c3.through_root_min == 1);
  CHECK(c3.through_root_max == 1);
  CHECK(c3.admissible_total == 21);

  auto c4 = ctx(4).adm.census();
  CHECK(c4.bases == 75);
  CHECK(c4.through_root_min == 5);
  CHECK(c4.through_root_max == 5);
  CHECK(c4.pair_unique);
  CHECK(c4.admissible_total == 136);
}

TEST_CASE("admissibility and closure") {
  const auto& [rs, w, adm] = ctx(3);
  int16_t b1 = static_cast<int16_t>(rs.simple(0));
  int16_t b3 = static_cast<int16_t>(rs.simple(2));
  int16_t b5 = static_cast<int16_t>(beta5_index(rs));

  CHECK(adm.is_admissible({}));
  CHECK(adm.is_admissible({b1}));
  CHECK(!adm.is_admissible([&] {
    OrthoSet s{b1, b3};
    std::sort(s.begin(), s.end());
    return s;
  }()));

  OrthoSet pair{b1, b3};
  std::sort(pair.begin(), pair.end());
  OrthoSet basis{b1, b3, b5};
  std::sort(basis.begin(), basis.end());
  CHECK(adm.is_admissible(basis));
  CHECK(adm.closure(pair) == basis);
  CHECK(adm.closure({b1}) == OrthoSet{b1});
  CHECK(adm.closure_delta_exponent(pair) == 2);
  CHECK(adm.closure_delta_exponent(basis) == 0);
}

TEST_CASE("H4 closure of {b1,b3} adds beta5 and beta7") {
  const auto& [rs, w, adm] = ctx(4);
  OrthoSet pair{static_cast<int16_t>(rs.simple(0)), static_cast<int16_t>(rs.simple(2))};
  std::sort(pair.begin(), pair.end());
  OrthoSet cl = adm.closure(pair);
  CHECK(cl.size() == 4);
  CHECK(adm.closure_delta_exponent(pair) == 4);
  CHECK(std::binary_search(cl.begin(), cl.end(), static_cast<int16_t>(beta5_index(rs))));
  CHECK(std::binary_search(cl.begin(), cl.end(), static_cast<int16_t>(beta7_index(rs))));
}

TEST_CASE("closure is equivariant") {
  {
    const auto& [rs, w, adm] = ctx(3);  // exhaustive for H3
    std::vector<OrthoSet> orth_sets;
    for (int i = 0; i < rs.size(); ++i)
      for (int j = i + 1; j < rs.size(); ++j)
        if (rs.inner_idx(i, j).is_zero())
          orth_sets.push_back({static_cast<int16_t>(i), static_cast<int16_t>(j)});
    for (int g = 0; g < w.order(); ++g)
      for (const OrthoSet& b : orth_sets)
        CHECK(adm.closure(act_set(w, g, b)) == act_set(w, g, adm.closure(b)));
  }
  {
    const auto& [rs, w, adm] = ctx(4);  // sampled for H4
    std::mt19937_64 rng(3);
    std::vector<OrthoSet> orth_sets;
    for (int i = 0; i < rs.size(); ++i)
      for (int j = i + 1; j < rs.size(); ++j)
        if (rs.inner_idx(i, j).is_zero())
          orth_sets.push_back({static_cast<int16_t>(i), static_cast<int16_t>(j)});
    for (int t = 0; t < 4000; ++t) {
      int g = static_cast<int>(rng() % w.order());
      const OrthoSet& b = orth_sets[rng() % orth_sets.size()];
      CHECK(adm.closure(act_set(w, g, b)) == act_set(w, g, adm.closure(b)));
    }
  }
}

TEST_CASE("cell data cardinalities") {
  {
    const auto& [rs, w, adm] = ctx(3);
    CellData c = CellData::build(rs, w, adm, Variant::standard);
    CHECK(c.n1.size() == 8);
    CHECK(c.d1.size() == 15);
    CHECK(c.c1.size() == 4);
    CHECK(c.n2.size() == 24);
    CHECK(c.d2.size() == 5);
    CHECK(c.z_elem == -1);
  }
  {
    const auto& [rs, w, adm] = ctx(4);
    CellData c = CellData::build(rs, w, adm, Variant::standard);
    CHECK(c.n1.size() == 240);
    CHECK(c.d1.size() == 60);
    CHECK(c.c1.size() == 60);
    CHECK(c.n2.size() == 192);
    CHECK(c.d2.size() == 75);

    CellData chen = CellData::build(rs, w, adm, Variant::chen);
    CHECK(chen.c1.size() == 120);
  }
}

TEST_CASE("N1 decomposition is unique, N2 is the setwise stabilizer") {
  for (int rank : {3, 4}) {
    const auto& [rs, w, adm] = ctx(rank);
    CellData c = CellData::build(rs, w, adm, Variant::standard);

    // r1^a z^b c covers N1 exactly once
    std::vector<int32_t> built;
    int32_t r1 = c.gen_elem[0];
    for (int a = 0; a < 2; ++a)
      for (int zb = 0; zb < (c.z_elem >= 0 ? 2 : 1); ++zb)
        for (int32_t cc : c.c1) {
          int32_t e = cc;
          if (zb) e = w.compose(c.z_elem, e);
          if (a) e = w.compose(r1, e);
          built.push_back(e);
        }
    std::sort(built.begin(), built.end());
    CHECK(std::adjacent_find(built.begin(), built.end()) == built.end());
    CHECK(built == c.n1);

    // setwise stabilizer definition
    for (int g = 0; g < w.order(); g += (rank == 3 ? 1 : 37)) {
      bool stab = act_set(w, g, c.canonical_basis) == c.canonical_basis;
      CHECK(stab == static_cast<bool>(c.in_n2[g]));
    }
  }
}
