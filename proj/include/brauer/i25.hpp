#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brauer {

// Reduction table for the rank-2 monoid on {r1, r2, e1, e2} with the
// 5-bond presentation: for each positive root g of the I2(5) subsystem on
// {beta1, beta2}, the identity  e_g * e1 = delta^d * (group word) * e1.
//
// The words are certified by brute-force closure of the presentation
// itself: a bidirectional breadth-first search over the word-equivalence
// graph generated by the defining relations, tracking the delta exponent.
// No normal-form machinery is involved, so this is an independent oracle
// for the engine's reduction rules.
struct I25Entry {
  std::string gamma;          // "b1", "b2", "b1+pb2", "pb1+b2", "pb1+pb2"
  std::vector<uint8_t> word;  // left group factor over generators {0,1}
  int delta;                  // delta exponent picked up by the reduction
};

struct I25Table {
  std::vector<I25Entry> entries;  // all five, in the order above
  size_t states_explored = 0;
};

// Throws std::runtime_error on closure failure (a search cap hit before
// the expected reduction was certified).
I25Table i25_brute_force();

}  // namespace brauer
