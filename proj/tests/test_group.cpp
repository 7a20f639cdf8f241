#include <random>

#include "brauer/group.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

struct Ctx {
  RootSystem rs;
  GroupTable w;
};

const Ctx& h3() {
  static Ctx c{RootSystem::build(DiagramSpec::h3()), {}};
  static bool once = [] {
    c.w = GroupTable::enumerate(c.rs, simple_reflection_perms(c.rs));
    return true;
  }();
  (void)once;
  return c;
}

const Ctx& h4() {
  static Ctx c{RootSystem::build(DiagramSpec::h4()), {}};
  static bool once = [] {
    c.w = GroupTable::enumerate(c.rs, simple_reflection_perms(c.rs));
    return true;
  }();
  (void)once;
  return c;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(h3().w.order() == 120);
  CHECK(h4().w.order() == 14400);
  RootSystem d6 = RootSystem::build(DiagramSpec::d6());
  CHECK(GroupTable::enumerate(d6, simple_reflection_perms(d6)).order() == 23040);
}

TEST_CASE("element_from_word") {
  const auto& [rs, w] = h3();
  CHECK(w.element_from_word({}) == 0);
  CHECK(w.element_from_word({0, 0}) == 0);  // r1 r1 = 1
  // 5-bond braid: r1 r2 r1 r2 r1 = r2 r1 r2 r1 r2
  CHECK(w.element_from_word({0, 1, 0, 1, 0}) == w.element_from_word({1, 0, 1, 0, 1}));
  // words compose like the group
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<uint8_t> a, b;
    for (int i = 0; i < 6; ++i) a.push_back(rng() % 3);
    for (int i = 0; i < 6; ++i) b.push_back(rng() % 3);
    std::vector<uint8_t> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(w.element_from_word(ab) == w.compose(w.element_from_word(a), w.element_from_word(b)));
  }
}

TEST_CASE("canonical words are BFS length-lex and reduced") {
  const auto& [rs, w] = h3();
  for (int g = 1; g < w.order(); ++g) {
    auto wd = w.word(g);
    CHECK(static_cast<int>(wd.size()) == w.length(g));
    CHECK(w.element_from_word(wd) == g);
  }
  // length(w) == length(w^-1)
  for (int g = 0; g < w.order(); ++g) CHECK(w.length(g) == w.length(w.inverse(g)));
  // length == number of positive roots sent negative
  for (int g = 0; g < w.order(); g += 7) {
    int negs = 0;
    for (int i = 0; i < rs.size(); ++i) negs += w.perm(g)[i] < 0;
    CHECK(negs == w.length(g));
  }
}

TEST_CASE("signed permutations match the coefficient-level action") {
  const auto& [rs, w] = h4();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<uint8_t> word;
    for (int i = 0; i < 8; ++i) word.push_back(rng() % 4);
    int g = w.element_from_word(word);
    for (int r = 0; r < rs.size(); r += 5) {
      // coefficient route: reflect by each simple mirror, leftmost letter last
      Coeffs v = rs.root(r);
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = rs.reflect(rs.root(rs.simple(*it)), v);
      auto [idx, sign] = rs.to_positive(v);
      CHECK(w.act(g, r + 1) == sign * (idx + 1));
    }
  }
}

TEST_CASE("subgroup <r3,r4,r5> of W(H4) is W(H3), z central of order 2") {
  const auto& [rs, w] = h4();
  int b5 = beta5_index(rs);
  int r5 = w.index_of(reflection_perm(rs, b5));
  REQUIRE(r5 >= 0);
  int r3 = w.element_from_word({2}), r4 = w.element_from_word({3});

  std::vector<char> seen(w.order(), 0);
  std::vector<int32_t> sub{0};
  seen[0] = 1;
  for (size_t head = 0; head < sub.size(); ++head)
    for (int s : {r3, r4, r5}) {
      int nxt = w.compose(sub[head], s);
      if (!seen[nxt]) {
        seen[nxt] = 1;
        sub.push_back(nxt);
      }
    }
  CHECK(sub.size() == 120);

  int z = central_z(w);
  CHECK(z != 0);
  CHECK(w.compose(z, z) == 0);
  CHECK(w.compose(z, r3) == w.compose(r3, z));
  CHECK(w.compose(z, r4) == w.compose(r4, z));
  CHECK(w.compose(z, r5) == w.compose(r5, z));
}

TEST_CASE("beta5 and beta7") {
  const auto& [rs3, w3] = h3();
  const Golden phi = Golden::phi();
  int b5 = beta5_index(rs3);
  CHECK(rs3.root(b5) == Coeffs{phi * phi, Golden(2) * phi, phi});
  CHECK(rs3.inner_idx(b5, rs3.simple(0)).is_zero());
  CHECK(rs3.inner_idx(b5, rs3.simple(2)).is_zero());

  const auto& [rs4, w4] = h4();
  int b5h4 = beta5_index(rs4);
  CHECK(rs4.inner_idx(b5h4, rs4.simple(3)) == -phi);

  int b7 = beta7_index(rs4);
  CHECK(rs4.inner_idx(b7, rs4.simple(0)).is_zero());
  CHECK(rs4.inner_idx(b7, b7) == Golden(2));
  // independent oracle: exhaustive search over the table
  int expect = -1;
  for (int i = 0; i < rs4.size(); ++i) {
    if (rs4.inner_idx(i, rs4.simple(0)).is_zero() &&
        rs4.inner_idx(i, rs4.simple(2)).is_zero() && rs4.inner_idx(i, b5h4).is_zero()) {
      CHECK(expect == -1);
      expect = i;
    }
  }
  CHECK(b7 == expect);
}

TEST_CASE("coset representatives") {
  const auto& [rs, w] = h3();
  // N1 as brute stabilizer of beta1 up to sign
  std::vector<int32_t> n1;
  for (int g = 0; g < w.order(); ++g)
    if (w.act_pos(g, rs.simple(0)) == rs.simple(0)) n1.push_back(g);
  CHECK(n1.size() == 8);
  CHECK(coset_reps(w, n1).size() == 15);
  CHECK(coset_reps(w, {0}).size() == 120);
}

TEST_CASE("enumeration guard refuses E8") {
  RootSystem e8 = RootSystem::build(DiagramSpec::e8());
  CHECK_THROWS_AS(GroupTable::enumerate(e8, simple_reflection_perms(e8)),
                  std::runtime_error);
}
