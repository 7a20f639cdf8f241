#include "brauer/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

#include "brauer/cache.hpp"

namespace brauer {

// ---------------------------------------------------------------- words

Word parse_word(const std::string& text, int rank) {
  Word out;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string tok = text.substr(start, i - start);
    if (tok == "d") {
      ++out.delta;
      continue;
    }
    if (tok == "d-") {
      --out.delta;
      continue;
    }
    if (tok.size() >= 2 && (tok[0] == 'r' || tok[0] == 'e')) {
      bool digits = true;
      for (size_t k = 1; k < tok.size(); ++k)
        digits &= std::isdigit(static_cast<unsigned char>(tok[k])) != 0;
      if (digits) {
        int idx = std::stoi(tok.substr(1));
        if (idx < 1 || idx > rank)
          throw WordParseError("generator index out of range: " + tok, start);
        out.letters.push_back({tok[0] == 'r' ? Letter::R : Letter::E,
                               static_cast<uint8_t>(idx - 1)});
        continue;
      }
    }
    throw WordParseError("unrecognised token: " + tok, start);
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string s;
  for (int64_t i = 0; i < w.delta; ++i) s += s.empty() ? "d" : " d";
  for (int64_t i = 0; i > w.delta; --i) s += s.empty() ? "d-" : " d-";
  for (const Letter& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += l.kind == Letter::R ? 'r' : 'e';
    s += std::to_string(l.index + 1);
  }
  return s;
}

// ---------------------------------------------------------------- build

Engine Engine::build(const DiagramSpec& spec, Variant variant, const std::string& cache_dir) {
  if (spec.name != "H3" && spec.name != "H4")
    throw std::invalid_argument("engine: system must be H3 or H4");
  Engine e;
  e.rs_ = std::make_shared<const RootSystem>(RootSystem::build(spec));
  auto gens = simple_reflection_perms(*e.rs_);

  GroupTable w;
  bool loaded = false;
  if (!cache_dir.empty())
    loaded = GroupCache::load(cache_file_for(cache_dir, spec.name), *e.rs_, gens, &w);
  if (!loaded) {
    w = GroupTable::enumerate(*e.rs_, gens);
    if (!cache_dir.empty()) GroupCache::save(cache_file_for(cache_dir, spec.name), w);
  }
  e.w_ = std::make_shared<const GroupTable>(std::move(w));

  e.adm_ = std::make_shared<const AdmissibleTables>(AdmissibleTables::build(*e.rs_));
  e.cells_ = CellData::build(*e.rs_, *e.w_, *e.adm_, variant);
  e.i25_ = i25_brute_force();
  e.build_reduction_tables();
  return e;
}

void Engine::build_reduction_tables() {
  const RootSystem& rs = *rs_;
  const GroupTable& w = *w_;
  const int n = rs.size();
  const int b1 = rs.simple(0);
  const int b3 = rs.simple(2);
  const Golden phi = Golden::phi();
  const Golden one(1);

  // I2(5) pattern roots on {beta1, beta2} and their certified reductions.
  auto pat_coeffs = [&](Golden x, Golden y) {
    Coeffs v(rs.rank(), Golden(0));
    v[0] = x;
    v[1] = y;
    return rs.find(v);
  };
  const int pat_root[4] = {pat_coeffs(Golden(0), one), pat_coeffs(one, phi),
                           pat_coeffs(phi, one), pat_coeffs(phi, phi)};
  int32_t pat_elem[4];
  for (int i = 0; i < 4; ++i) {
    if (pat_root[i] < 0) throw EngineError("I2(5) pattern root missing");
    pat_elem[i] = w.element_from_word(i25_.entries[i + 1].word);
  }

  cls_.assign(n, RootClass::i25);
  red_g_.assign(n, -1);
  red_c_.assign(n, -1);
  orth_s_.assign(n, -1);
  top_u_.assign(n, -1);
  const int32_t r1 = cells_.gen_elem[0];

  for (int g = 0; g < n; ++g) {
    if (g == b1) {
      cls_[g] = RootClass::equal_b1;
      continue;
    }
    Golden ip = rs.inner_idx(g, b1);
    if (ip.is_zero()) {
      cls_[g] = RootClass::orth_b1;
      int basis = adm_->basis_of_pair(b1, g);
      if (basis < 0) throw EngineError("orthogonal pair without closure basis");
      orth_s_[g] = cells_.d2_for_basis[basis];
      continue;
    }
    if (ip == one || ip == Golden(-1)) {
      cls_[g] = RootClass::a2;
      int refl = w.index_of(reflection_perm(rs, g));
      if (refl < 0) throw EngineError("reflection missing from group table");
      red_g_[g] = w.compose(r1, refl);
      red_c_[g] = 0;
    } else {
      cls_[g] = RootClass::i25;
      int32_t t = -1, pat = -1;
      for (int32_t cand : cells_.n1) {
        int img = w.act_pos(cand, g);
        for (int p = 0; p < 4; ++p)
          if (img == pat_root[p]) {
            t = cand;
            pat = p;
            break;
          }
        if (t >= 0) break;
      }
      if (t < 0)
        throw EngineError("no N1 conjugator into the I2(5) subsystem for root " +
                          std::to_string(g));
      red_g_[g] = w.compose(w.inverse(t), pat_elem[pat]);
      red_c_[g] = cells_.reduce_middle(cells_.h_part(t));
    }
    if (w.act_pos(red_g_[g], b1) != g)
      throw EngineError("reduction witness has the wrong left set");
  }

  if (rs.rank() == 4) {
    for (int g = 0; g < w.order(); ++g)
      if (w.act_pos(g, b1) == b3 && w.act_pos(g, b3) == b1) {
        kappa_ = g;
        break;
      }
    if (kappa_ < 0) throw EngineError("no element swaps beta1 and beta3");
  }

  // e_g (e1 e3) = top_u[g] (e1 e3) for g outside the canonical basis.
  const OrthoSet& bc = cells_.canonical_basis;
  auto in_basis = [&](int g) {
    return std::binary_search(bc.begin(), bc.end(), static_cast<int16_t>(g));
  };
  for (int g = 0; g < n; ++g) {
    if (in_basis(g)) continue;
    if (cls_[g] == RootClass::a2 || cls_[g] == RootClass::i25)
      top_u_[g] = w.compose(red_g_[g], red_c_[g]);
  }
  for (int g = 0; g < n; ++g) {
    if (in_basis(g) || top_u_[g] >= 0) continue;
    // g orthogonal to beta1 but outside the basis: route through kappa.
    if (cls_[g] != RootClass::orth_b1 || kappa_ < 0)
      throw EngineError("unexpected root class in top-cell table");
    int gt = w.act_pos(kappa_, g);
    if (top_u_[gt] < 0) throw EngineError("kappa image lacks a top-cell reduction");
    top_u_[g] = w.compose(w.inverse(kappa_), top_u_[gt]);
  }
  for (int g = 0; g < n; ++g) {
    if (in_basis(g)) continue;
    OrthoSet img = act_set(w, top_u_[g], bc);
    if (!std::binary_search(img.begin(), img.end(), static_cast<int16_t>(g)))
      throw EngineError("top-cell image basis misses the multiplying root");
  }
}

// ------------------------------------------------------- multiplication

NormalForm Engine::lmul_r(int gen, const NormalForm& x) const {
  const GroupTable& w = *w_;
  NormalForm r = x;
  switch (x.cell) {
    case CellKind::group:
      r.u = w.lmul_gen(gen, x.u);
      return r;
    case CellKind::e1: {
      int32_t g = w.lmul_gen(gen, x.u);
      int32_t u = cells_.d1_rep(g);
      int32_t n = w.compose(w.inverse(u), g);
      r.u = u;
      r.v = cells_.reduce_middle(w.compose(cells_.h_part(n), x.v));
      return r;
    }
    case CellKind::e1e3:
      r.u = cells_.d2_rep(w.lmul_gen(gen, x.u));
      return r;
  }
  throw EngineError("lmul_r: bad cell");
}

// g * e_gamma folded into the e1 cell (gamma a positive-root index).
NormalForm Engine::fold_group_times_e(int64_t delta, int32_t g, int gamma) const {
  const GroupTable& w = *w_;
  int32_t ug = cells_.d1_for_root[gamma];
  int32_t t1 = w.compose(g, ug);
  int32_t u = cells_.d1_rep(t1);
  int32_t n = w.compose(w.inverse(u), t1);
  int32_t cn = cells_.reduce_middle(cells_.h_part(n));
  int32_t h = w.compose(cn, w.inverse(ug));
  int32_t hinv = w.inverse(h);
  int32_t ut = cells_.d1_rep(hinv);
  int32_t nt = w.compose(w.inverse(ut), hinv);
  int32_t v = cells_.reduce_middle(cells_.h_part(w.inverse(nt)));
  return NormalForm{delta, CellKind::e1, u, v, w.inverse(ut)};
}

NormalForm Engine::lmul_e_root(int beta, const NormalForm& x) const {
  const GroupTable& w = *w_;
  switch (x.cell) {
    case CellKind::group: {
      int gamma = w.act_pos(w.inverse(x.u), beta);
      return fold_group_times_e(x.delta, x.u, gamma);
    }
    case CellKind::e1: {
      int gamma = w.act_pos(w.inverse(x.u), beta);
      switch (cls_[gamma]) {
        case RootClass::equal_b1: {
          NormalForm r = x;
          r.delta += 2;
          return r;
        }
        case RootClass::orth_b1: {
          // e_gamma e1 = s (e1 e3) s^-1 with s the rep of {b1,gamma}^cl.
          int32_t s = orth_s_[gamma];
          int32_t u = cells_.d2_rep(w.compose(x.u, s));
          int32_t hinv = w.compose(w.compose(w.inverse(x.w), w.inverse(x.v)), s);
          int32_t ub = cells_.d2_rep(hinv);
          return NormalForm{x.delta, CellKind::e1e3, u, 0, w.inverse(ub)};
        }
        case RootClass::a2:
        case RootClass::i25: {
          // e_gamma e1 = red_g e1 red_c.
          int32_t m = w.compose(x.u, red_g_[gamma]);
          int32_t u = cells_.d1_rep(m);
          int32_t n = w.compose(w.inverse(u), m);
          int32_t v = cells_.reduce_middle(
              w.compose(cells_.h_part(n), w.compose(red_c_[gamma], x.v)));
          return NormalForm{x.delta, CellKind::e1, u, v, x.w};
        }
      }
      throw EngineError("lmul_e: bad root class");
    }
    case CellKind::e1e3: {
      int gamma = w.act_pos(w.inverse(x.u), beta);
      const OrthoSet& bc = cells_.canonical_basis;
      if (std::binary_search(bc.begin(), bc.end(), static_cast<int16_t>(gamma))) {
        NormalForm r = x;
        r.delta += 2;
        return r;
      }
      NormalForm r = x;
      r.u = cells_.d2_rep(w.compose(x.u, top_u_[gamma]));
      return r;
    }
  }
  throw EngineError("lmul_e: bad cell");
}

NormalForm Engine::lmul_e(int gen, const NormalForm& x) const {
  return lmul_e_root(rs_->simple(gen), x);
}

NormalForm Engine::normal_form(const Word& word) const {
  NormalForm x;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) x = lmul(*it, x);
  x.delta += word.delta;
  return x;
}

Word Engine::word_of(const NormalForm& x) const {
  const GroupTable& w = *w_;
  Word out;
  out.delta = x.delta;
  auto push_group = [&](int32_t g) {
    for (uint8_t s : w.word(g)) out.letters.push_back({Letter::R, s});
  };
  switch (x.cell) {
    case CellKind::group:
      push_group(x.u);
      break;
    case CellKind::e1:
      push_group(x.u);
      out.letters.push_back({Letter::E, 0});
      push_group(x.v);
      push_group(x.w);
      break;
    case CellKind::e1e3:
      push_group(x.u);
      out.letters.push_back({Letter::E, 0});
      out.letters.push_back({Letter::E, 2});
      push_group(x.w);
      break;
  }
  return out;
}

NormalForm Engine::multiply(const NormalForm& x, const NormalForm& y) const {
  Word wx = word_of(x);
  NormalForm r = y;
  for (auto it = wx.letters.rbegin(); it != wx.letters.rend(); ++it) r = lmul(*it, r);
  r.delta += x.delta;
  return r;
}

NormalForm Engine::involution_op(const NormalForm& x) const {
  Word wd = word_of(x);
  std::reverse(wd.letters.begin(), wd.letters.end());
  return normal_form(wd);
}

bool Engine::valid(const NormalForm& x) const {
  const GroupTable& w = *w_;
  switch (x.cell) {
    case CellKind::group:
      return x.v == 0 && x.w == 0 && x.u >= 0 && x.u < w.order();
    case CellKind::e1:
      return cells_.is_d1[x.u] && cells_.is_c1[x.v] && cells_.is_d1[w.inverse(x.w)];
    case CellKind::e1e3:
      return cells_.is_d2[x.u] && x.v == 0 && cells_.is_d2[w.inverse(x.w)];
  }
  return false;
}

OrthoSet Engine::left_set(const NormalForm& x) const {
  switch (x.cell) {
    case CellKind::group:
      return {};
    case CellKind::e1:
      return {static_cast<int16_t>(cells_.root_of_elem[x.u])};
    case CellKind::e1e3:
      return act_set(*w_, x.u, cells_.canonical_basis);
  }
  return {};
}

// ---------------------------------------------------------------- action

OrthoSet Engine::action(const Letter& g, const OrthoSet& b) const {
  const GroupTable& w = *w_;
  if (g.kind == Letter::R) return act_set(w, cells_.gen_elem[g.index], b);

  const int beta = rs_->simple(g.index);
  if (std::binary_search(b.begin(), b.end(), static_cast<int16_t>(beta))) return b;
  bool orth = true;
  for (int16_t r : b) orth &= rs_->inner_idx(beta, r).is_zero();
  if (orth) {
    OrthoSet ext = b;
    ext.insert(std::lower_bound(ext.begin(), ext.end(), static_cast<int16_t>(beta)),
               static_cast<int16_t>(beta));
    return adm_->closure(ext);
  }
  if (b.size() <= 1) return {static_cast<int16_t>(beta)};
  // b is a basis not containing beta: the image is the left set of
  // e_beta e_b, read off the top-cell reduction table.
  int basis = adm_->basis_index(b);
  if (basis < 0) throw EngineError("action: set is not admissible");
  int32_t sigma = cells_.d2_for_basis[basis];
  int gamma = w.act_pos(w.inverse(sigma), beta);
  return act_set(w, w.compose(sigma, top_u_[gamma]), cells_.canonical_basis);
}

OrthoSet Engine::action_word(const Word& wd, const OrthoSet& b) const {
  OrthoSet cur = b;
  for (auto it = wd.letters.rbegin(); it != wd.letters.rend(); ++it) cur = action(*it, cur);
  return cur;
}

// ---------------------------------------------------------------- census

CensusResult Engine::census(bool verify_closure, int jobs) const {
  CensusResult res;
  const GroupTable& w = *w_;
  const int k = rs_->rank();
  res.group = w.order();
  res.cell1 = static_cast<int64_t>(cells_.d1.size()) * cells_.c1.size() * cells_.d1.size();
  res.cell2 = static_cast<int64_t>(cells_.d2.size()) * cells_.d2.size();
  if (!verify_closure) return res;

  // Worker: check every generator left-multiplication of a form is again
  // a valid form, with the even delta grading (0 for r, 0 or +2 for e).
  std::atomic<int64_t> rewrites{0};
  std::atomic<bool> ok{true};
  std::vector<std::string> errors(std::max(jobs, 1));

  auto check_form = [&](const NormalForm& x, int64_t& count) {
    for (int g = 0; g < k; ++g) {
      NormalForm a = lmul_r(g, x);
      if (!valid(a) || a.delta != x.delta) throw EngineError("closure: bad r-multiple");
      NormalForm b = lmul_e(g, x);
      if (!valid(b) || (b.delta != x.delta && b.delta != x.delta + 2))
        throw EngineError("closure: bad e-multiple");
      count += 2;
    }
  };

  const int32_t nd1 = static_cast<int32_t>(cells_.d1.size());
  const int32_t nc1 = static_cast<int32_t>(cells_.c1.size());
  const int32_t nd2 = static_cast<int32_t>(cells_.d2.size());
  const int64_t total_units = w.order() + static_cast<int64_t>(nd1) * nc1 + nd2;

  jobs = std::max(1, jobs);
  auto worker = [&](int job) {
    int64_t count = 0;
    try {
      for (int64_t unit = job; unit < total_units; unit += jobs) {
        if (!ok.load(std::memory_order_relaxed)) return;
        if (unit < w.order()) {
          check_form(NormalForm{0, CellKind::group, static_cast<int32_t>(unit), 0, 0}, count);
        } else if (unit < w.order() + static_cast<int64_t>(nd1) * nc1) {
          int64_t rest = unit - w.order();
          int32_t u = cells_.d1[rest / nc1];
          int32_t v = cells_.c1[rest % nc1];
          for (int32_t wi = 0; wi < nd1; ++wi)
            check_form(NormalForm{0, CellKind::e1, u, v, w_->inverse(cells_.d1[wi])}, count);
        } else {
          int32_t u = cells_.d2[unit - w.order() - static_cast<int64_t>(nd1) * nc1];
          for (int32_t wi = 0; wi < nd2; ++wi)
            check_form(NormalForm{0, CellKind::e1e3, u, 0, w_->inverse(cells_.d2[wi])}, count);
        }
      }
    } catch (const std::exception& ex) {
      errors[job] = ex.what();
      ok.store(false);
    }
    rewrites += count;
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& t : pool) t.join();
  }
  for (const std::string& e : errors)
    if (!e.empty()) throw EngineError(e);
  res.rewrites = rewrites.load();
  res.closure_ok = ok.load();
  return res;
}

// ------------------------------------------------------------- relations

namespace {

Word wr(std::initializer_list<int> gens) {  // r-letters, 0-based
  Word w;
  for (int g : gens) w.letters.push_back({Letter::R, static_cast<uint8_t>(g)});
  return w;
}

Word cat(const Word& a, const Word& b) {
  Word w = a;
  w.delta += b.delta;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

Word we(int g) { return Word{0, {{Letter::E, static_cast<uint8_t>(g)}}}; }

}  // namespace

Word Engine::random_word(std::mt19937_64& rng, int len) const {
  Word w;
  for (int i = 0; i < len; ++i) {
    uint64_t x = rng();
    Letter l;
    l.kind = (x & 1) ? Letter::R : Letter::E;
    l.index = static_cast<uint8_t>((x >> 1) % rank());
    w.letters.push_back(l);
  }
  return w;
}

std::vector<Engine::RelationFamily> Engine::relation_families() const {
  const int k = rank();
  const DiagramSpec& dg = rs_->diagram();
  std::vector<RelationFamily> out;
  auto family = [&](std::string name, std::string detail,
                    std::vector<std::pair<Word, Word>> inst) {
    out.push_back({std::move(name), std::move(detail), std::move(inst)});
  };

  Word empty;
  Word deltas;
  deltas.delta = 2;

  family("rel-01", "delta delta^-1 = 1", {{parse_word("d d-", k), empty}});
  {
    std::vector<std::pair<Word, Word>> inst;
    for (int i = 0; i < k; ++i) {
      Word d1 = parse_word("d", k);
      inst.push_back({cat(d1, wr({i})), cat(wr({i}), d1)});
      inst.push_back({cat(d1, we(i)), cat(we(i), d1)});
    }
    family("rel-02", "delta is central", inst);
  }
  {
    std::vector<std::pair<Word, Word>> inst;
    for (int i = 0; i < k; ++i) inst.push_back({wr({i, i}), empty});
    family("rel-03", "r_i^2 = 1", inst);
  }
  {
    std::vector<std::pair<Word, Word>> inst;
    for (int i = 0; i < k; ++i) {
      inst.push_back({cat(wr({i}), we(i)), we(i)});
      inst.push_back({cat(we(i), wr({i})), we(i)});
    }
    family("rel-04", "r_i e_i = e_i r_i = e_i", inst);
  }
  {
    std::vector<std::pair<Word, Word>> inst;
    for (int i = 0; i < k; ++i) inst.push_back({cat(we(i), we(i)), cat(deltas, we(i))});
    family("rel-05", "e_i^2 = delta^2 e_i", inst);
  }
  {
    std::vector<std::pair<Word, Word>> r6, r7, r8;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j || dg.bond(i + 1, j + 1) != 2) continue;
        r6.push_back({wr({i, j}), wr({j, i})});
        r7.push_back({cat(we(i), wr({j})), cat(wr({j}), we(i))});
        r8.push_back({cat(we(i), we(j)), cat(we(j), we(i))});
      }
    family("rel-06", "commuting reflections", r6);
    family("rel-07", "e_i r_j = r_j e_i (i ~/~ j)", r7);
    family("rel-08", "e_i e_j = e_j e_i (i ~/~ j)", r8);
  }
  {
    std::vector<std::pair<Word, Word>> r9, r10, r11;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j || dg.bond(i + 1, j + 1) != 3) continue;
        r9.push_back({wr({i, j, i}), wr({j, i, j})});
        r10.push_back({cat(wr({j, i}), we(j)), cat(we(i), we(j))});
        r11.push_back({cat(cat(wr({i}), we(j)), wr({i})), cat(cat(wr({j}), we(i)), wr({j}))});
      }
    family("rel-09", "simple-bond braid", r9);
    family("rel-10", "r_j r_i e_j = e_i e_j (i ~ j)", r10);
    family("rel-11", "r_i e_j r_i = r_j e_i r_j (i ~ j)", r11);
  }
  family("rel-12", "r1r2r1r2r1 = r2r1r2r1r2", {{wr({0, 1, 0, 1, 0}), wr({1, 0, 1, 0, 1})}});
  family("rel-13", "r1r2e1r2r1 = r2r1e2r1r2",
         {{cat(cat(wr({0, 1}), we(0)), wr({1, 0})), cat(cat(wr({1, 0}), we(1)), wr({0, 1}))}});
  family("rel-14", "e1e2e1 = e1", {{cat(cat(we(0), we(1)), we(0)), we(0)}});
  family("rel-15", "e1r2e1 = e1", {{cat(cat(we(0), wr({1})), we(0)), we(0)}});
  family("rel-16", "e1r2r1r2e1 = e1", {{cat(cat(we(0), wr({1, 0, 1})), we(0)), we(0)}});
  if (k == 4 && variant() == Variant::standard) {
    Word inner = wr({1, 0, 1, 0, 2, 1, 0, 1, 2, 0, 1, 0, 1, 2, 3});
    Word lhs = we(0);
    for (int i = 0; i < 5; ++i) lhs = cat(lhs, inner);
    family("rel-17", "e1 (r2r1r2r1r3r2r1r2r3r1r2r1r2r3r4)^5 = e1", {{lhs, we(0)}});
  } else {
    family("rel-17",
           k == 4 ? "dropped in the chen variant" : "not applicable in rank 3", {});
  }
  {
    // conjugation identities (and r5 e1 r5 = e1, r5 spelled as a word)
    std::vector<std::pair<Word, Word>> inst;
    inst.push_back({cat(cat(wr({1, 0, 1, 0}), we(1)), wr({0, 1, 0, 1})), we(0)});
    inst.push_back({cat(cat(wr({0, 1, 0, 1}), we(0)), wr({1, 0, 1, 0})), we(1)});
    inst.push_back({cat(cat(wr({1, 2}), we(1)), wr({2, 1})), we(2)});
    inst.push_back({cat(cat(wr({2, 1}), we(2)), wr({1, 2})), we(1)});
    Word r5 = wr({1, 0, 1, 0, 2, 1, 0, 1, 2, 0, 1, 0, 1});
    inst.push_back({cat(cat(r5, we(0)), r5), we(0)});
    family("conjugation", "root conjugation identities incl. r5 e1 r5 = e1", inst);
  }
  return out;
}

RelationReport Engine::verify_relations(uint64_t seed, int samples) const {
  RelationReport report;
  std::mt19937_64 rng(seed);
  for (const RelationFamily& fam : relation_families()) {
    RelationCheck c{fam.name, fam.detail, static_cast<int>(fam.instances.size()), true};
    for (const auto& [lhs, rhs] : fam.instances)
      if (normal_form(lhs) != normal_form(rhs)) c.pass = false;
    for (int s = 0; s < samples && !fam.instances.empty(); ++s) {
      const auto& [lhs, rhs] = fam.instances[rng() % fam.instances.size()];
      Word pre = random_word(rng, static_cast<int>(rng() % 6));
      Word post = random_word(rng, static_cast<int>(rng() % 6));
      if (normal_form(cat(cat(pre, lhs), post)) != normal_form(cat(cat(pre, rhs), post)))
        c.pass = false;
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

bool Engine::action_relation_sound() const {
  for (const RelationFamily& fam : relation_families())
    for (const auto& [lhs, rhs] : fam.instances)
      for (const OrthoSet& b : adm_->admissible_sets())
        if (action_word(lhs, b) != action_word(rhs, b)) return false;
  return true;
}

}  // namespace brauer
