#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "brauer/normal_form.hpp"
#include "brauer/ortho.hpp"

namespace brauer {

// D6/E8 machinery: admissible root sets under the simply laced closure,
// the monoid action on them, orthogonal mates (D6), and the folded
// subgroups giving the H3/H4 embeddings.
class SimplyLaced {
 public:
  static SimplyLaced build(const DiagramSpec& spec);  // D6 or E8

  const RootSystem& roots() const { return rs_; }
  int size() const { return rs_.size(); }
  bool orthogonal(int i, int j) const { return (orth_[i][j >> 6] >> (j & 63)) & 1; }

  // Least admissible superset: repeatedly adjoin a positive root that is
  // orthogonal to the whole set and completes some triple of members to a
  // D4 quadruple (half-sum of the four is again a root).
  OrthoSet closure(const OrthoSet& b) const;

  // The monoid action: R_i acts naturally with positivity folding, E_i by
  //   B                     if alpha_i in B,
  //   (B u {alpha_i})^cl    if alpha_i perp B,
  //   R_beta R_i B          for beta in B not orthogonal to alpha_i.
  OrthoSet act(const Letter& g, const OrthoSet& b) const;
  OrthoSet act_word(const Word& w, const OrthoSet& b) const;

  OrthoSet reflect_set(int mirror_root, const OrthoSet& b) const;

 private:
  RootSystem rs_;
  std::vector<std::array<uint64_t, 2>> orth_;
};

// The unique positive root orthogonal to `root` spanning a common D2
// plane with it (epsilon-coordinate model of D6).
int orthogonal_mate(const SimplyLaced& d6, int root);

// A folding of the simply laced diagram onto H3 (phi1, into D6) or H4
// (phi2, into E8): each H-generator maps to a product of two commuting
// target reflections.  The image subgroup is enumerated; W(E8) never is.
struct Folding {
  const SimplyLaced* sl = nullptr;
  std::string name;                       // "phi1" / "phi2"
  int hrank = 0;
  std::vector<std::array<int, 2>> pairs;  // 0-based target node pair per H-generator
  GroupTable image;                       // generated by the pair products

  static Folding build_phi1(const SimplyLaced& d6);
  static Folding build_phi2(const SimplyLaced& e8);

  // Image of an H-group word under the folding, as an image-table element.
  int element(const std::vector<uint8_t>& hword) const { return image.element_from_word(hword); }
};

struct EmbedReport {
  std::string map;
  int group_order = 0;
  struct Check {
    std::string name;
    bool pass = false;
  };
  std::vector<Check> relation_checks;
  int orbit_pair = 0;
  int orbit_top = 0;
  bool r5_check = false;
  bool extras_ok = false;  // alpha'/alpha'' root checks (phi2), mate checks (phi1)
  bool action_identity = false;  // the E-word identity on {alpha6, alpha8} (phi2)
  bool all_pass(int expect_order, int expect_pair, int expect_top) const {
    bool ok = group_order == expect_order && orbit_pair == expect_pair &&
              orbit_top == expect_top && r5_check && extras_ok && action_identity;
    for (const Check& c : relation_checks) ok &= c.pass;
    return ok;
  }
};

// Runs every embedding-level verification for phi1 (hrank 3) or phi2
// (hrank 4) and reports the results.
EmbedReport run_embedding(const SimplyLaced& sl, int hrank);

// Orbit of an admissible set under the image subgroup of a folding.
std::vector<OrthoSet> folded_orbit(const Folding& f, const OrthoSet& seed);

}  // namespace brauer
