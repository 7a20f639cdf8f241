#include "brauer/root_system.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

const RootSystem& h3() {
  static RootSystem rs = RootSystem::build(DiagramSpec::h3());
  return rs;
}
const RootSystem& h4() {
  static RootSystem rs = RootSystem::build(DiagramSpec::h4());
  return rs;
}

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(h3().size() == 15);
  CHECK(h4().size() == 60);
  CHECK(RootSystem::build(DiagramSpec::d6()).size() == 30);
  CHECK(RootSystem::build(DiagramSpec::e8()).size() == 120);
  CHECK(RootSystem::build(DiagramSpec::i2_5()).size() == 5);
}

TEST_CASE("gram data") {
  const RootSystem& rs = h4();
  const Golden phi = Golden::phi();
  CHECK(rs.inner_idx(rs.simple(0), rs.simple(1)) == -phi);
  CHECK(rs.inner_idx(rs.simple(0), rs.simple(0)) == Golden(2));
  CHECK(rs.inner_idx(rs.simple(0), rs.simple(2)).is_zero());
  CHECK(rs.inner_idx(rs.simple(1), rs.simple(2)) == Golden(-1));
}

TEST_CASE("reflection examples") {
  const RootSystem& rs = h3();
  const Golden phi = Golden::phi();
  const Coeffs& b1 = rs.root(rs.simple(0));
  const Coeffs& b2 = rs.root(rs.simple(1));
  const Coeffs& b3 = rs.root(rs.simple(2));

  Coeffs neg_b1 = rs.reflect(b1, b1);
  for (int i = 0; i < 3; ++i) CHECK(neg_b1[i] == -b1[i]);

  Coeffs img = rs.reflect(b2, b1);  // beta1 + phi beta2
  CHECK(img == Coeffs{Golden(1), phi, Golden(0)});

  CHECK(rs.reflect(b1, b3) == b3);

  // non-norm-2 mirror is rejected
  Coeffs twice = b1;
  for (Golden& c : twice) c = Golden(2) * c;
  CHECK_THROWS(rs.reflect(twice, b1));
}

TEST_CASE("to_positive") {
  const RootSystem& rs = h3();
  const Golden phi = Golden::phi();
  Coeffs neg_b1{Golden(-1), Golden(0), Golden(0)};
  auto [i1, s1] = rs.to_positive(neg_b1);
  CHECK(i1 == rs.simple(0));
  CHECK(s1 == -1);

  Coeffs v{Golden(1), phi, Golden(0)};
  auto [i2, s2] = rs.to_positive(v);
  CHECK(rs.root(i2) == v);
  CHECK(s2 == 1);

  Coeffs w{Golden(0), Golden(-1), Golden(-1)};
  auto [i3, s3] = rs.to_positive(w);
  CHECK(s3 == -1);
  CHECK(rs.root(i3) == Coeffs{Golden(0), Golden(1), Golden(1)});

  CHECK_THROWS(rs.to_positive(Coeffs{Golden(1), Golden(1), Golden(1)}));
}

TEST_CASE("positive table is closed under simple reflections, reflections are involutions") {
  for (const RootSystem* rs : {&h3(), &h4()}) {
    for (int g = 0; g < rs->rank(); ++g) {
      int mirror = rs->simple(g);
      for (int i = 0; i < rs->size(); ++i) {
        int img = rs->reflect_idx(mirror, i + 1);
        CHECK(img != 0);
        CHECK(rs->reflect_idx(mirror, img) == i + 1);
      }
    }
    // inner products are reflection invariant
    for (int g = 0; g < rs->rank(); ++g) {
      int m = rs->simple(g);
      for (int i = 0; i < rs->size(); i += 3)
        for (int j = 0; j < rs->size(); j += 3) {
          int ii = rs->reflect_idx(m, i + 1), jj = rs->reflect_idx(m, j + 1);
          Golden lhs = rs->inner_idx(i, j);
          Golden rhs = rs->inner_idx((ii > 0 ? ii : -ii) - 1, (jj > 0 ? jj : -jj) - 1);
          if ((ii > 0) != (jj > 0)) rhs = -rhs;
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("brute-force oracle: norm-2 vector count in the D6 lattice") {
  // Independent of the closure enumeration: count integer vectors over the
  // simple-root basis with all |coeff| <= 3 and norm 2; exactly 60 = 2 x 30.
  RootSystem rs = RootSystem::build(DiagramSpec::d6());
  int count = 0;
  Coeffs v(6);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == 6) {
      if (rs.inner(v, v) == Golden(2)) ++count;
      return;
    }
    for (int c = -3; c <= 3; ++c) {
      v[pos] = Golden(c);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  CHECK(count == 60);
}
