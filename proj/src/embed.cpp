#include "brauer/embed.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "brauer/group.hpp"

namespace brauer {

SimplyLaced SimplyLaced::build(const DiagramSpec& spec) {
  if (spec.name != "D6" && spec.name != "E8")
    throw std::invalid_argument("SimplyLaced: D6 or E8 only");
  SimplyLaced s;
  s.rs_ = RootSystem::build(spec);
  s.orth_.assign(s.rs_.size(), {0, 0});
  for (int i = 0; i < s.rs_.size(); ++i)
    for (int j = 0; j < s.rs_.size(); ++j)
      if (i != j && s.rs_.inner_idx(i, j).is_zero())
        s.orth_[i][j >> 6] |= uint64_t(1) << (j & 63);
  return s;
}

OrthoSet SimplyLaced::closure(const OrthoSet& b) const {
  if (!is_orthogonal_set(rs_, b)) throw std::invalid_argument("closure: set not orthogonal");
  OrthoSet cur = b;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int d = 0; d < rs_.size() && !grew; ++d) {
      if (std::binary_search(cur.begin(), cur.end(), static_cast<int16_t>(d))) continue;
      bool perp = true;
      for (int16_t r : cur) perp &= orthogonal(d, r);
      if (!perp) continue;
      // does d complete some triple of cur to a D4 quadruple?
      const size_t m = cur.size();
      for (size_t a = 0; a < m && !grew; ++a)
        for (size_t bb = a + 1; bb < m && !grew; ++bb)
          for (size_t c = bb + 1; c < m && !grew; ++c) {
            Coeffs v = rs_.root(cur[a]);
            const Coeffs& vb = rs_.root(cur[bb]);
            const Coeffs& vc = rs_.root(cur[c]);
            const Coeffs& vd = rs_.root(d);
            bool even = true;
            for (int t = 0; t < rs_.rank(); ++t) {
              v[t] += vb[t] + vc[t] + vd[t];
              even &= v[t].a() % 2 == 0 && v[t].b() == 0;
            }
            if (!even) continue;
            for (int t = 0; t < rs_.rank(); ++t) v[t] = Golden(v[t].a() / 2);
            if (rs_.find(v) >= 0) {
              cur.insert(std::lower_bound(cur.begin(), cur.end(), static_cast<int16_t>(d)),
                         static_cast<int16_t>(d));
              grew = true;
            }
          }
    }
  }
  return cur;
}

OrthoSet SimplyLaced::reflect_set(int mirror_root, const OrthoSet& b) const {
  OrthoSet img;
  img.reserve(b.size());
  for (int16_t r : b) {
    int x = rs_.reflect_idx(mirror_root, r + 1);
    img.push_back(static_cast<int16_t>((x > 0 ? x : -x) - 1));
  }
  std::sort(img.begin(), img.end());
  return img;
}

OrthoSet SimplyLaced::act(const Letter& g, const OrthoSet& b) const {
  const int alpha = rs_.simple(g.index);
  if (g.kind == Letter::R) return reflect_set(alpha, b);
  if (std::binary_search(b.begin(), b.end(), static_cast<int16_t>(alpha))) return b;
  bool perp = true;
  for (int16_t r : b) perp &= orthogonal(alpha, r);
  if (perp) {
    OrthoSet ext = b;
    ext.insert(std::lower_bound(ext.begin(), ext.end(), static_cast<int16_t>(alpha)),
               static_cast<int16_t>(alpha));
    return closure(ext);
  }
  for (int16_t beta : b)
    if (!orthogonal(alpha, beta)) return reflect_set(beta, reflect_set(alpha, b));
  throw std::logic_error("act: unreachable");
}

OrthoSet SimplyLaced::act_word(const Word& w, const OrthoSet& b) const {
  OrthoSet cur = b;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = act(*it, cur);
  return cur;
}

// ------------------------------------------------------------- D6 mates

namespace {

// Epsilon coordinates for the D6 labelling used here: fork tips
// alpha1 = e5+e6, alpha2 = e5-e6, then alpha3 = e4-e5, ..., alpha6 = e1-e2.
std::array<int, 6> eps_of(const RootSystem& rs, int root) {
  static const int simple_eps[6][6] = {
      {0, 0, 0, 0, 1, 1},  {0, 0, 0, 0, 1, -1}, {0, 0, 0, 1, -1, 0},
      {0, 0, 1, -1, 0, 0}, {0, 1, -1, 0, 0, 0}, {1, -1, 0, 0, 0, 0}};
  std::array<int, 6> out{};
  const Coeffs& v = rs.root(root);
  for (int s = 0; s < 6; ++s) {
    if (v[s].b() != 0) throw std::logic_error("D6 root with phi component");
    for (int t = 0; t < 6; ++t) out[t] += static_cast<int>(v[s].a()) * simple_eps[s][t];
  }
  return out;
}

}  // namespace

int orthogonal_mate(const SimplyLaced& d6, int root) {
  const RootSystem& rs = d6.roots();
  if (rs.rank() != 6) throw std::invalid_argument("orthogonal_mate: D6 only");
  std::array<int, 6> a = eps_of(rs, root);
  int found = -1;
  for (int b = 0; b < rs.size(); ++b) {
    if (b == root || !d6.orthogonal(root, b)) continue;
    std::array<int, 6> c = eps_of(rs, b);
    for (int sign : {1, -1}) {
      int twos = 0, zeros = 0;
      for (int t = 0; t < 6; ++t) {
        int s = a[t] + sign * c[t];
        if (s == 0) ++zeros;
        if (s == 2 || s == -2) ++twos;
      }
      if (twos == 1 && zeros == 5) {
        if (found >= 0 && found != b) throw std::logic_error("orthogonal mate not unique");
        found = b;
      }
    }
  }
  if (found < 0) throw std::logic_error("no orthogonal mate");
  return found;
}

// ------------------------------------------------------------- foldings

namespace {

Folding build_folding(const SimplyLaced& sl, std::string name, int hrank,
                      std::vector<std::array<int, 2>> pairs) {
  Folding f;
  f.sl = &sl;
  f.name = std::move(name);
  f.hrank = hrank;
  f.pairs = std::move(pairs);
  const RootSystem& rs = sl.roots();
  std::vector<SignedPerm> gens;
  for (const auto& [a, b] : f.pairs) {
    SignedPerm pa = reflection_perm(rs, rs.simple(a));
    SignedPerm pb = reflection_perm(rs, rs.simple(b));
    if (compose_perm(pa, pb) != compose_perm(pb, pa))
      throw std::logic_error("folding pair does not commute");
    gens.push_back(compose_perm(pa, pb));
  }
  f.image = GroupTable::enumerate(rs, std::move(gens));
  return f;
}

}  // namespace

Folding Folding::build_phi1(const SimplyLaced& d6) {
  return build_folding(d6, "phi1", 3, {{{1, 3}}, {{2, 4}}, {{0, 5}}});
}

Folding Folding::build_phi2(const SimplyLaced& e8) {
  return build_folding(e8, "phi2", 4, {{{1, 4}}, {{3, 5}}, {{2, 6}}, {{0, 7}}});
}

std::vector<OrthoSet> folded_orbit(const Folding& f, const OrthoSet& seed) {
  std::set<OrthoSet> seen{seed};
  std::vector<OrthoSet> queue{seed};
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int g = 0; g < f.image.ngens(); ++g) {
      int e = f.image.element_from_word({static_cast<uint8_t>(g)});
      OrthoSet img = act_set(f.image, e, queue[head]);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return queue;
}

// ------------------------------------------------------------ the suite

namespace {

int element_order(const GroupTable& t, int g) {
  int x = g, n = 1;
  while (x != 0) {
    x = t.compose(x, g);
    if (++n > 64) throw std::logic_error("unexpected element order");
  }
  return n;
}

const std::vector<uint8_t> kR5Word = {1, 0, 1, 0, 2, 1, 0, 1, 2, 0, 1, 0, 1};

}  // namespace

EmbedReport run_embedding(const SimplyLaced& sl, int hrank) {
  EmbedReport rep;
  const RootSystem& rs = sl.roots();
  Folding f = hrank == 3 ? Folding::build_phi1(sl) : Folding::build_phi2(sl);
  rep.map = f.name;
  rep.group_order = f.image.order();

  // Every H-type Coxeter relation must hold for the folded generators.
  const DiagramSpec& hd = hrank == 3 ? DiagramSpec::h3() : DiagramSpec::h4();
  for (int i = 0; i < hrank; ++i) {
    int gi = f.image.element_from_word({static_cast<uint8_t>(i)});
    rep.relation_checks.push_back(
        {"order(phi(r" + std::to_string(i + 1) + ")) = 2", element_order(f.image, gi) == 2});
    for (int j = i + 1; j < hrank; ++j) {
      int gj = f.image.element_from_word({static_cast<uint8_t>(j)});
      int m = hd.bond(i + 1, j + 1);
      std::string name = "order(phi(r" + std::to_string(i + 1) + ") phi(r" +
                         std::to_string(j + 1) + ")) = " + std::to_string(m);
      rep.relation_checks.push_back({name, element_order(f.image, f.image.compose(gi, gj)) == m});
    }
  }

  if (hrank == 3) {
    // phi1(r5) = R_{alpha4*} R_{alpha6*}
    int a4s = orthogonal_mate(sl, rs.simple(3));
    int a6s = orthogonal_mate(sl, rs.simple(5));
    SignedPerm want = compose_perm(reflection_perm(rs, a4s), reflection_perm(rs, a6s));
    rep.r5_check = f.image.perm(f.element(kR5Word)) == want;

    // fork tips are mates, and mate is an involution
    rep.extras_ok = orthogonal_mate(sl, rs.simple(1)) == rs.simple(0) &&
                    orthogonal_mate(sl, rs.simple(0)) == rs.simple(1);
    for (int r = 0; r < rs.size(); ++r)
      rep.extras_ok &= orthogonal_mate(sl, orthogonal_mate(sl, r)) == r &&
                       sl.orthogonal(r, orthogonal_mate(sl, r));

    // B1 = {a2, a4} and B2 = {a1, a2, a4, a4*, a6, a6*}
    OrthoSet pair{static_cast<int16_t>(rs.simple(1)), static_cast<int16_t>(rs.simple(3))};
    std::sort(pair.begin(), pair.end());
    rep.orbit_pair = static_cast<int>(folded_orbit(f, pair).size());

    OrthoSet b2{static_cast<int16_t>(rs.simple(0)), static_cast<int16_t>(rs.simple(1)),
                static_cast<int16_t>(rs.simple(3)), static_cast<int16_t>(a4s),
                static_cast<int16_t>(rs.simple(5)), static_cast<int16_t>(a6s)};
    std::sort(b2.begin(), b2.end());
    OrthoSet seed{static_cast<int16_t>(rs.simple(0)), static_cast<int16_t>(rs.simple(1)),
                  static_cast<int16_t>(rs.simple(3)), static_cast<int16_t>(rs.simple(5))};
    std::sort(seed.begin(), seed.end());
    rep.extras_ok &= sl.closure(seed) == b2;
    rep.orbit_top = static_cast<int>(folded_orbit(f, b2).size());
    rep.action_identity = true;  // the E-word identity is an E8 statement
  } else {
    // alpha' and alpha'' are E8 roots orthogonal to alpha2 and alpha5,
    // and phi2(r5) is the product of their reflections.
    auto root_from = [&](std::initializer_list<int> coeffs) {
      Coeffs v;
      for (int c : coeffs) v.push_back(Golden(c));
      int idx = rs.find(v);
      if (idx < 0) throw std::logic_error("expected E8 root missing");
      return idx;
    };
    int ap = root_from({0, 1, 1, 2, 1, 0, 0, 0});
    int app = root_from({0, 1, 1, 2, 2, 2, 1, 0});
    rep.extras_ok = true;
    for (int a : {ap, app})
      for (int s : {rs.simple(1), rs.simple(4)})
        rep.extras_ok &= rs.inner_idx(a, s).is_zero();
    SignedPerm want = compose_perm(reflection_perm(rs, ap), reflection_perm(rs, app));
    rep.r5_check = f.image.perm(f.element(kR5Word)) == want;

    OrthoSet pair{static_cast<int16_t>(rs.simple(1)), static_cast<int16_t>(rs.simple(4))};
    std::sort(pair.begin(), pair.end());
    rep.orbit_pair = static_cast<int>(folded_orbit(f, pair).size());

    OrthoSet seed{static_cast<int16_t>(rs.simple(1)), static_cast<int16_t>(rs.simple(2)),
                  static_cast<int16_t>(rs.simple(4)), static_cast<int16_t>(rs.simple(6))};
    std::sort(seed.begin(), seed.end());
    OrthoSet top = sl.closure(seed);
    rep.extras_ok &= top.size() == 8;
    rep.orbit_top = static_cast<int>(folded_orbit(f, top).size());

    // E5 E6 E7 E2 E4 E5 {a6, a8} = {a2, a5}
    Word eword;
    for (int i : {4, 5, 6, 1, 3, 4}) eword.letters.push_back({Letter::E, static_cast<uint8_t>(i)});
    OrthoSet start{static_cast<int16_t>(rs.simple(5)), static_cast<int16_t>(rs.simple(7))};
    std::sort(start.begin(), start.end());
    rep.action_identity = sl.act_word(eword, start) == pair;
  }
  return rep;
}

}  // namespace brauer
