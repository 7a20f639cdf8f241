#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "brauer/cells.hpp"
#include "brauer/i25.hpp"
#include "brauer/normal_form.hpp"

namespace brauer {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CensusResult {
  int64_t group = 0, cell1 = 0, cell2 = 0;
  int64_t total() const { return group + cell1 + cell2; }
  bool closure_ok = false;
  int64_t rewrites = 0;  // generator left-multiplications checked
};

struct RelationCheck {
  std::string name;
  std::string detail;
  int instances = 0;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Rewrite engine for the H3/H4 monoid: left multiplication of the
// three-cell normal forms by r and e generators, full multiplication by
// word folding, the op involution, censuses with closure verification,
// the defining-relation verifier and the admissible-set action.
//
// All tables are built once and then read-only, so one Engine may be
// shared across threads.
class Engine {
 public:
  // spec must be H3 or H4; cache_dir (optional) caches the W(H4) table.
  static Engine build(const DiagramSpec& spec, Variant variant = Variant::standard,
                      const std::string& cache_dir = "");

  const RootSystem& roots() const { return *rs_; }
  const GroupTable& group() const { return *w_; }
  const AdmissibleTables& admissible() const { return *adm_; }
  const CellData& cells() const { return cells_; }
  Variant variant() const { return cells_.variant; }
  int rank() const { return rs_->rank(); }

  NormalForm identity() const { return {}; }

  NormalForm lmul_r(int gen, const NormalForm& x) const;
  NormalForm lmul_e(int gen, const NormalForm& x) const;  // e_{beta_gen}
  NormalForm lmul_e_root(int root_idx, const NormalForm& x) const;
  NormalForm lmul(const Letter& l, const NormalForm& x) const {
    return l.kind == Letter::R ? lmul_r(l.index, x) : lmul_e(l.index, x);
  }

  NormalForm normal_form(const Word& word) const;
  Word word_of(const NormalForm& x) const;
  NormalForm multiply(const NormalForm& x, const NormalForm& y) const;
  NormalForm involution_op(const NormalForm& x) const;

  bool valid(const NormalForm& x) const;

  // Left admissible set of a form: {} / {pos(u b1)} / pos(u . basis).
  OrthoSet left_set(const NormalForm& x) const;

  // Monoid action on admissible root sets (delta acts trivially).
  OrthoSet action(const Letter& g, const OrthoSet& b) const;
  OrthoSet action_word(const Word& w, const OrthoSet& b) const;

  // Enumerates all normal forms and, if verify_closure, left-multiplies
  // each by every generator, checking the result is again a valid form.
  CensusResult census(bool verify_closure = true, int jobs = 1) const;

  // The defining relations plus the conjugation identities, instantiated
  // for every applicable generator pair.
  struct RelationFamily {
    std::string name;
    std::string detail;
    std::vector<std::pair<Word, Word>> instances;
  };
  std::vector<RelationFamily> relation_families() const;

  // Exact check of every relation instance, then `samples` random-context
  // soundness checks per family (prefix/suffix words of length <= 5).
  RelationReport verify_relations(uint64_t seed = 2024, int samples = 0) const;

  // Every defining relation acts identically on every admissible set.
  bool action_relation_sound() const;

  // The I2(5) reduction table used by the engine (built by the
  // presentation brute-forcer at construction).
  const I25Table& i25_table() const { return i25_; }

  // Random words/forms for property tests.
  Word random_word(std::mt19937_64& rng, int len) const;

 private:
  enum class RootClass : uint8_t { equal_b1, orth_b1, a2, i25 };

  std::shared_ptr<const RootSystem> rs_;
  std::shared_ptr<const GroupTable> w_;
  std::shared_ptr<const AdmissibleTables> adm_;
  CellData cells_;
  I25Table i25_;

  std::vector<RootClass> cls_;     // per positive root, relative to beta1
  std::vector<int32_t> red_g_;     // e_g e1 = red_g * e1 * red_c
  std::vector<int32_t> red_c_;
  std::vector<int32_t> orth_s_;    // D2 rep of the basis {b1,g}^cl (orth class)
  std::vector<int32_t> top_u_;     // e_g e1e3 = top_u * e1e3 (g outside the basis)
  int32_t kappa_ = -1;             // swaps b1 and b3 (H4)

  void build_reduction_tables();
  NormalForm fold_group_times_e(int64_t delta, int32_t g, int gamma) const;
};

}  // namespace brauer
