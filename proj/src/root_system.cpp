#include "brauer/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace brauer {

namespace {

// height, then lexicographic coefficients — the fixed table order.
bool root_less(const Coeffs& x, const Coeffs& y) {
  Golden hx(0), hy(0);
  for (const Golden& c : x) hx += c;
  for (const Golden& c : y) hy += c;
  if (hx != hy) return hx < hy;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

int first_nonzero_sign(const Coeffs& v) {
  for (const Golden& c : v)
    if (!c.is_zero()) return c.sign();
  return 0;
}

}  // namespace

size_t RootSystem::coeff_hash(const Coeffs& v) {
  size_t h = 1469598103934665603ULL;
  std::hash<Golden> gh;
  for (const Golden& c : v) {
    h ^= gh(c);
    h *= 1099511628211ULL;
  }
  return h;
}

Golden RootSystem::inner(const Coeffs& x, const Coeffs& y) const {
  if (x.size() != static_cast<size_t>(rank()) || y.size() != x.size())
    throw std::invalid_argument("inner: dimension mismatch");
  Golden s(0);
  for (int i = 0; i < rank(); ++i) {
    if (x[i].is_zero()) continue;
    Golden row(0);
    for (int j = 0; j < rank(); ++j)
      if (!y[j].is_zero()) row += gram_[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

Coeffs RootSystem::reflect(const Coeffs& mirror, const Coeffs& x) const {
  if (inner(mirror, mirror) != Golden(2))
    throw std::invalid_argument("reflect: mirror must have norm 2");
  Golden c = inner(x, mirror);
  Coeffs r = x;
  for (int i = 0; i < rank(); ++i) r[i] -= c * mirror[i];
  return r;
}

int RootSystem::find(const Coeffs& v) const {
  auto it = index_.find(coeff_hash(v));
  if (it == index_.end()) return -1;
  for (int idx : it->second)
    if (roots_[idx] == v) return idx;
  return -1;
}

std::pair<int, int> RootSystem::to_positive(const Coeffs& v) const {
  int idx = find(v);
  if (idx >= 0) return {idx, +1};
  Coeffs neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  idx = find(neg);
  if (idx >= 0) return {idx, -1};
  throw std::invalid_argument("to_positive: not a root");
}

int RootSystem::reflect_idx(int mirror_idx, int signed_root) const {
  int idx = signed_root > 0 ? signed_root - 1 : -signed_root - 1;
  Coeffs img = roots_[idx];
  Golden c = inner(img, roots_[mirror_idx]);
  for (int i = 0; i < rank(); ++i) img[i] -= c * roots_[mirror_idx][i];
  auto [pos, sign] = to_positive(img);
  int s = (signed_root > 0 ? 1 : -1) * sign;
  return s * (pos + 1);
}

Golden RootSystem::height(int idx) const {
  Golden h(0);
  for (const Golden& c : roots_[idx]) h += c;
  return h;
}

void RootSystem::index_roots() {
  index_.clear();
  for (int i = 0; i < size(); ++i) index_[coeff_hash(roots_[i])].push_back(i);
  simple_idx_.assign(rank(), -1);
  for (int g = 0; g < rank(); ++g) {
    Coeffs v(rank(), Golden(0));
    v[g] = Golden(1);
    simple_idx_[g] = find(v);
    if (simple_idx_[g] < 0) throw std::logic_error("root table lost a simple root");
  }
}

RootSystem RootSystem::build(const DiagramSpec& spec) {
  RootSystem rs;
  rs.diagram_ = spec;
  rs.gram_ = spec.gram();
  for (int i = 0; i < spec.rank; ++i)
    for (int j = 0; j < i; ++j)
      if (rs.gram_[i][j] != rs.gram_[j][i])
        throw std::invalid_argument("Gram matrix not symmetric");

  const int n = spec.rank;
  std::vector<Coeffs> simples;
  for (int g = 0; g < n; ++g) {
    Coeffs v(n, Golden(0));
    v[g] = Golden(1);
    simples.push_back(v);
  }

  // Closure of the simple roots under simple reflections with positivity
  // folding.  A capped worklist guards against malformed Gram data.
  constexpr size_t kMaxRoots = 10000;
  std::vector<Coeffs> table = simples;
  std::unordered_map<size_t, std::vector<int>> seen;
  auto lookup = [&](const Coeffs& v) -> int {
    auto it = seen.find(coeff_hash(v));
    if (it == seen.end()) return -1;
    for (int idx : it->second)
      if (table[idx] == v) return idx;
    return -1;
  };
  for (int i = 0; i < n; ++i) seen[coeff_hash(table[i])].push_back(i);

  for (size_t head = 0; head < table.size(); ++head) {
    for (int g = 0; g < n; ++g) {
      Coeffs img = table[head];
      Golden c = rs.inner(img, simples[g]);
      img[g] -= c;  // reflect across the g-th simple root
      if (first_nonzero_sign(img) < 0)
        for (Golden& x : img) x = -x;
      if (lookup(img) < 0) {
        table.push_back(img);
        seen[coeff_hash(img)].push_back(static_cast<int>(table.size()) - 1);
        if (table.size() > kMaxRoots)
          throw std::runtime_error("root closure does not terminate");
      }
    }
  }

  std::sort(table.begin(), table.end(), root_less);
  rs.roots_ = std::move(table);
  rs.index_roots();

  // Enumeration sanity: norm 2 everywhere, and the positivity trichotomy
  // (first nonzero coefficient positive iff all coefficients >= 0).
  for (int i = 0; i < rs.size(); ++i) {
    if (rs.inner_idx(i, i) != Golden(2))
      throw std::logic_error("enumerated root with norm != 2");
    bool all_nonneg = true;
    for (const Golden& c : rs.roots_[i]) all_nonneg &= c.sign() >= 0;
    if (!all_nonneg || first_nonzero_sign(rs.roots_[i]) <= 0)
      throw std::logic_error("positive root with mixed-sign coefficients");
  }
  return rs;
}

}  // namespace brauer
