#include "brauer/i25.hpp"
#include "doctest.h"

using namespace brauer;

// The five reductions e_g e1 in the rank-2 5-bond monoid, certified by
// brute-force closure of the presentation and frozen here from hand
// derivations:
//   e_{b1} e1      = delta^2 e1
//   e_{b2} e1      = r1 r2 r1 r2 e1   (via the twisted braid + e1 r2 r1 r2 e1 = e1)
//   e_{b1+p b2} e1 = r2 e1            (e_c e1 = r2 e1 r2 e1 = r2 e1 by e1 r2 e1 = e1)
//   e_{p b1+b2} e1 = r2 r1 r2 e1
//   e_{p b1+p b2} e1 = r1 r2 e1
TEST_CASE("i25 brute-force closure certifies the reduction table") {
  I25Table t = i25_brute_force();
  REQUIRE(t.entries.size() == 5);

  CHECK(t.entries[0].gamma == "b1");
  CHECK(t.entries[0].word.empty());
  CHECK(t.entries[0].delta == 2);

  CHECK(t.entries[1].gamma == "b2");
  CHECK(t.entries[1].word == std::vector<uint8_t>{0, 1, 0, 1});
  CHECK(t.entries[1].delta == 0);

  CHECK(t.entries[2].gamma == "b1+pb2");
  CHECK(t.entries[2].word == std::vector<uint8_t>{1});
  CHECK(t.entries[2].delta == 0);

  CHECK(t.entries[3].gamma == "pb1+b2");
  CHECK(t.entries[3].word == std::vector<uint8_t>{1, 0, 1});
  CHECK(t.entries[3].delta == 0);

  CHECK(t.entries[4].gamma == "pb1+pb2");
  CHECK(t.entries[4].word == std::vector<uint8_t>{0, 1});
  CHECK(t.entries[4].delta == 0);
}
