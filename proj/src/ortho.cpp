#include "brauer/ortho.hpp"

#include <algorithm>
#include <stdexcept>

namespace brauer {

bool is_orthogonal_set(const RootSystem& rs, const OrthoSet& b) {
  for (size_t i = 0; i < b.size(); ++i) {
    for (size_t j = i + 1; j < b.size(); ++j) {
      if (b[i] == b[j]) return false;
      if (!rs.inner_idx(b[i], b[j]).is_zero()) return false;
    }
  }
  return std::is_sorted(b.begin(), b.end());
}

AdmissibleTables AdmissibleTables::build(const RootSystem& rs) {
  AdmissibleTables t;
  t.rs_ = &rs;
  const int n = rs.size();
  const int rank = rs.rank();

  // Orthogonality bitmap, then depth-first extension to maximal sets.
  std::vector<std::vector<char>> orth(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      orth[i][j] = (i != j) && rs.inner_idx(i, j).is_zero();

  OrthoSet cur;
  auto extend = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == rank) {
      t.bases_.push_back(cur);
      return;
    }
    for (int r = start; r < n; ++r) {
      bool ok = true;
      for (int16_t x : cur) ok &= orth[x][r];
      if (!ok) continue;
      cur.push_back(static_cast<int16_t>(r));
      self(self, r + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);

  t.through_root_.assign(n, {});
  for (size_t b = 0; b < t.bases_.size(); ++b) {
    const OrthoSet& basis = t.bases_[b];
    for (int16_t r : basis) t.through_root_[r].push_back(static_cast<int>(b));
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = i + 1; j < basis.size(); ++j) {
        auto key = std::make_pair<int, int>(basis[i], basis[j]);
        auto [it, inserted] = t.pair_basis_.emplace(key, static_cast<int>(b));
        if (!inserted)
          throw std::logic_error("orthogonal pair lies in two bases");
        (void)it;
      }
  }

  t.admissible_.push_back({});
  for (int r = 0; r < n; ++r) t.admissible_.push_back({static_cast<int16_t>(r)});
  for (const OrthoSet& b : t.bases_) t.admissible_.push_back(b);
  return t;
}

int AdmissibleTables::basis_index(const OrthoSet& b) const {
  if (static_cast<int>(b.size()) != rs_->rank()) return -1;
  int id = basis_of_pair(b[0], b[1]);
  if (id >= 0 && bases_[id] == b) return id;
  return -1;
}

bool AdmissibleTables::is_admissible(const OrthoSet& b) const {
  if (b.size() <= 1) return true;
  return basis_index(b) >= 0;
}

int AdmissibleTables::basis_of_pair(int r1, int r2) const {
  if (r1 > r2) std::swap(r1, r2);
  auto it = pair_basis_.find({r1, r2});
  return it == pair_basis_.end() ? -1 : it->second;
}

OrthoSet AdmissibleTables::closure(const OrthoSet& b) const {
  if (b.size() <= 1) return b;
  int id = basis_of_pair(b[0], b[1]);
  if (id < 0) throw std::logic_error("closure: pair not contained in a basis");
  const OrthoSet& basis = bases_[id];
  for (int16_t r : b)
    if (!std::binary_search(basis.begin(), basis.end(), r))
      throw std::logic_error("closure: set not contained in the pair's basis");
  return basis;
}

AdmissibleTables::Census AdmissibleTables::census() const {
  Census c;
  c.bases = static_cast<int>(bases_.size());
  int mn = rs_->size() ? static_cast<int>(through_root_[0].size()) : 0;
  int mx = mn;
  for (const auto& v : through_root_) {
    mn = std::min(mn, static_cast<int>(v.size()));
    mx = std::max(mx, static_cast<int>(v.size()));
  }
  c.through_root_min = mn;
  c.through_root_max = mx;
  // Unique basis through every orthogonal pair <=> the pair map saw each
  // pair exactly once (build throws on duplicates) and covers all pairs.
  size_t pairs = 0;
  for (int i = 0; i < rs_->size(); ++i)
    for (int j = i + 1; j < rs_->size(); ++j)
      if (rs_->inner_idx(i, j).is_zero()) ++pairs;
  c.pair_unique = pairs == pair_basis_.size();
  c.admissible_total = static_cast<int>(admissible_.size());
  return c;
}

OrthoSet act_set(const GroupTable& w, int g, const OrthoSet& b) {
  OrthoSet img;
  img.reserve(b.size());
  for (int16_t r : b) img.push_back(static_cast<int16_t>(w.act_pos(g, r)));
  std::sort(img.begin(), img.end());
  return img;
}

}  // namespace brauer
