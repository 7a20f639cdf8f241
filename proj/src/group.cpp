#include "brauer/group.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace brauer {

SignedPerm identity_perm(int n) {
  SignedPerm p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<int16_t>(i + 1);
  return p;
}

SignedPerm compose_perm(const SignedPerm& g, const SignedPerm& h) {
  SignedPerm r(h.size());
  for (size_t i = 0; i < h.size(); ++i) {
    int16_t mid = h[i];
    int16_t img = mid > 0 ? g[mid - 1] : static_cast<int16_t>(-g[-mid - 1]);
    r[i] = img;
  }
  return r;
}

SignedPerm inverse_perm(const SignedPerm& g) {
  SignedPerm r(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    int16_t img = g[i];
    if (img > 0)
      r[img - 1] = static_cast<int16_t>(i + 1);
    else
      r[-img - 1] = static_cast<int16_t>(-(i + 1));
  }
  return r;
}

SignedPerm reflection_perm(const RootSystem& rs, int mirror_idx) {
  SignedPerm p(rs.size());
  for (int i = 0; i < rs.size(); ++i)
    p[i] = static_cast<int16_t>(rs.reflect_idx(mirror_idx, i + 1));
  return p;
}

std::vector<SignedPerm> simple_reflection_perms(const RootSystem& rs) {
  std::vector<SignedPerm> gens;
  for (int g = 0; g < rs.rank(); ++g) gens.push_back(reflection_perm(rs, rs.simple(g)));
  return gens;
}

int GroupTable::index_of(const SignedPerm& p) const {
  auto it = idx_.find(p);
  return it == idx_.end() ? -1 : it->second;
}

int GroupTable::compose(int g, int h) const {
  int r = index_of(compose_perm(elems_[g], elems_[h]));
  if (r < 0) throw std::logic_error("GroupTable::compose left the table");
  return r;
}

std::vector<uint8_t> GroupTable::word(int g) const {
  std::vector<uint8_t> w;
  while (g != 0) {
    w.push_back(last_gen_[g]);
    g = parent_[g];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

int GroupTable::element_from_word(const std::vector<uint8_t>& w) const {
  int g = 0;
  for (uint8_t s : w) {
    if (s >= gens_.size()) throw std::invalid_argument("word uses a bad generator index");
    g = rmul_gen(g, s);
  }
  return g;
}

void GroupTable::finish_tables() {
  const size_t n = elems_.size();
  inv_.resize(n);
  for (size_t g = 0; g < n; ++g) {
    int id = index_of(inverse_perm(elems_[g]));
    if (id < 0) throw std::logic_error("group table not closed under inverse");
    inv_[g] = id;
  }
  lmul_.resize(gens_.size() * n);
  for (size_t s = 0; s < gens_.size(); ++s)
    for (size_t g = 0; g < n; ++g) {
      int id = index_of(compose_perm(gens_[s], elems_[g]));
      if (id < 0) throw std::logic_error("group table not closed under generators");
      lmul_[s * n + g] = id;
    }
}

GroupTable GroupTable::enumerate(const RootSystem& rs, std::vector<SignedPerm> gens,
                                 size_t guard) {
  GroupTable t;
  t.rs_ = &rs;
  t.gens_ = std::move(gens);
  const int ng = static_cast<int>(t.gens_.size());

  t.elems_.push_back(identity_perm(rs.size()));
  t.idx_[t.elems_[0]] = 0;
  t.len_.push_back(0);
  t.parent_.push_back(0);
  t.last_gen_.push_back(0);
  t.rmul_.assign(ng, -1);

  // BFS in insertion order with generators tried in index order: the
  // first word reaching an element is its length-lex canonical word.
  for (size_t head = 0; head < t.elems_.size(); ++head) {
    for (int s = 0; s < ng; ++s) {
      SignedPerm img = compose_perm(t.elems_[head], t.gens_[s]);
      auto it = t.idx_.find(img);
      int id;
      if (it == t.idx_.end()) {
        id = static_cast<int>(t.elems_.size());
        if (static_cast<size_t>(id) >= guard)
          throw std::runtime_error("group enumeration guard exceeded (refusing to build W(E8)-sized tables)");
        t.idx_[img] = id;
        t.elems_.push_back(std::move(img));
        t.len_.push_back(t.len_[head] + 1);
        t.parent_.push_back(static_cast<int32_t>(head));
        t.last_gen_.push_back(static_cast<uint8_t>(s));
        t.rmul_.resize(t.rmul_.size() + ng, -1);
      } else {
        id = it->second;
      }
      t.rmul_[head * ng + s] = id;
    }
  }
  t.finish_tables();
  return t;
}

int beta5_index(const RootSystem& rs) {
  const Golden phi = Golden::phi();
  Coeffs expect(rs.rank(), Golden(0));
  expect[0] = phi * phi;
  expect[1] = Golden(2) * phi;
  expect[2] = phi;
  int idx = rs.find(expect);
  if (idx < 0) throw std::logic_error("beta5 not in the root table");

  // Independent route: r2 r1 r2 r1 r3 r2 applied to beta1.
  int cur = rs.simple(0) + 1;
  for (int m : {1, 2, 0, 1, 0, 1})  // rightmost reflection first
    cur = rs.reflect_idx(rs.simple(m), cur);
  if (cur != idx + 1)
    throw std::logic_error("beta5 reflection word disagrees with its coefficients");
  return idx;
}

int beta7_index(const RootSystem& rs) {
  if (rs.rank() != 4) throw std::invalid_argument("beta7 needs H4");
  int b1 = rs.simple(0), b3 = rs.simple(2), b5 = beta5_index(rs);
  int found = -1;
  for (int i = 0; i < rs.size(); ++i) {
    if (rs.inner_idx(i, b1).is_zero() && rs.inner_idx(i, b3).is_zero() &&
        rs.inner_idx(i, b5).is_zero()) {
      if (found >= 0) throw std::logic_error("beta7 is not unique");
      found = i;
    }
  }
  if (found < 0) throw std::logic_error("beta7 not found");
  return found;
}

int central_z(const GroupTable& w) {
  const RootSystem& rs = w.roots();
  if (rs.rank() != 4) throw std::invalid_argument("central_z needs W(H4)");
  int r5 = w.index_of(reflection_perm(rs, beta5_index(rs)));
  if (r5 < 0) throw std::logic_error("r5 is not in the group table");
  int r3 = w.lmul_gen(2, 0);
  int r4 = w.lmul_gen(3, 0);
  int prod = w.compose(w.compose(r5, r3), r4);
  int z = 0;
  for (int i = 0; i < 5; ++i) z = w.compose(z, prod);
  if (z == 0 || w.compose(z, z) != 0) throw std::logic_error("(r5 r3 r4)^5 must have order 2");
  for (int r : {r3, r4, r5})
    if (w.compose(z, r) != w.compose(r, z)) throw std::logic_error("z must be central in <r3,r4,r5>");
  return z;
}

std::vector<int32_t> coset_reps(const GroupTable& w, const std::vector<int32_t>& subgroup) {
  std::vector<char> covered(w.order(), 0);
  std::vector<int32_t> reps;
  for (int g = 0; g < w.order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (int32_t h : subgroup) covered[w.compose(g, h)] = 1;
  }
  return reps;
}

}  // namespace brauer
