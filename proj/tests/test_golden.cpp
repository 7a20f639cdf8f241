#include <limits>
#include <random>

#include "brauer/golden.hpp"
#include "doctest.h"

using brauer::Golden;

namespace {

Golden rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> d(-50, 50);
  return Golden(d(rng), d(rng));
}

}  // namespace

TEST_CASE("golden basics") {
  const Golden phi = Golden::phi();
  CHECK(Golden(1) + phi == Golden(1, 1));
  CHECK(Golden(2, -1) + Golden(-2, 1) == Golden(0));
  CHECK(Golden(0, 2) + Golden(1, 3) == Golden(1, 5));

  CHECK(phi * phi == Golden(1, 1));  // phi^2 = phi + 1
  CHECK(Golden(1, 1) * Golden(1) == Golden(1, 1));
  CHECK(phi * (Golden(1) - phi) == Golden(-1));
}

TEST_CASE("golden sign via the real embedding") {
  CHECK(Golden(1, -1).sign() == -1);  // 1 - phi < 0
  CHECK(Golden(0).sign() == 0);
  CHECK(Golden(-1, 1).sign() == 1);  // phi - 1 = 1/phi > 0
  CHECK(Golden(5, -3).sign() == 1);  // 5 - 3 phi = 0.145...
  CHECK(Golden(-5, 3).sign() == -1);
  CHECK(Golden(2, -1).sign() == 1);
  CHECK(Golden(-8, 5).sign() == 1);  // 5 phi - 8 = 0.09...
  CHECK(Golden(8, -5).sign() == -1);
}

TEST_CASE("galois conjugation") {
  const Golden phi = Golden::phi();
  CHECK(phi.galois() == Golden(1, -1));
  CHECK(Golden(5).galois() == Golden(5));
  CHECK(Golden(2, 3).galois().galois() == Golden(2, 3));
}

TEST_CASE("ring axioms, sign multiplicativity, galois homomorphism") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 2000; ++i) {
    Golden x = rnd(rng), y = rnd(rng), z = rnd(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);

    CHECK((x * y).sign() == x.sign() * y.sign());
    CHECK(((x * y).galois() == x.galois() * y.galois()));
    CHECK(((x + y).galois() == x.galois() + y.galois()));
  }
  for (int i = 0; i < 500; ++i) {
    Golden x = rnd(rng);
    CHECK((x.sign() == 0) == x.is_zero());
  }
}

TEST_CASE("overflow is signalled, never wrapped") {
  const int64_t big = std::numeric_limits<int64_t>::max();
  CHECK_THROWS_AS(Golden(big, 0) + Golden(big, 0), std::overflow_error);
  CHECK_THROWS_AS(Golden(big, 1) * Golden(2, 0), std::overflow_error);
  CHECK_THROWS_AS((-Golden(big, big)) - Golden(big, big), std::overflow_error);
  CHECK_THROWS_AS(Golden(big, big).galois(), std::overflow_error);
  // sign needs 2a + b
  CHECK_THROWS_AS(Golden(big, 1).sign(), std::overflow_error);
}

TEST_CASE("ordering matches the real embedding") {
  CHECK(Golden(1) < Golden::phi());
  CHECK(Golden::phi() < Golden(2));
  CHECK(Golden(0, 2) > Golden(3));     // 2 phi = 3.23...
  CHECK(Golden(13, -8) > Golden(0));   // 13 - 8 phi = 0.056
  CHECK(Golden(-13, 8) < Golden(0));
}
