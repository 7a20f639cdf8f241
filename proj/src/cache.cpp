#include "brauer/cache.hpp"

#include <cstring>
#include <fstream>
#include <vector>

namespace brauer {

namespace {

constexpr uint32_t kMagic = 0x48425257;  // "WRBH"
constexpr uint32_t kVersion = 1;

uint64_t fnv1a(const std::vector<char>& buf) {
  uint64_t h = 1469598103934665603ULL;
  for (char c : buf) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

template <typename T>
void put(std::vector<char>& buf, const T& v) {
  const char* p = reinterpret_cast<const char*>(&v);
  buf.insert(buf.end(), p, p + sizeof(T));
}

template <typename T>
bool get(const std::vector<char>& buf, size_t& pos, T* v) {
  if (pos + sizeof(T) > buf.size()) return false;
  std::memcpy(v, buf.data() + pos, sizeof(T));
  pos += sizeof(T);
  return true;
}

}  // namespace

std::string cache_file_for(const std::string& cache_dir, const std::string& system) {
  std::string name = system;
  for (char& c : name)
    if (c == '(' || c == ')') c = '_';
  return cache_dir + "/group_" + name + ".bin";
}

bool GroupCache::save(const std::string& path, const GroupTable& t) {
  std::vector<char> payload;
  const uint32_t order = static_cast<uint32_t>(t.order());
  const uint32_t nroots = static_cast<uint32_t>(t.roots().size());
  const uint32_t ngens = static_cast<uint32_t>(t.ngens());
  put(payload, order);
  put(payload, nroots);
  put(payload, ngens);
  for (uint32_t g = 0; g < ngens; ++g)
    for (int16_t x : t.gens_[g]) put(payload, x);
  for (uint32_t e = 0; e < order; ++e)
    for (int16_t x : t.elems_[e]) put(payload, x);
  for (uint32_t e = 0; e < order; ++e) {
    put(payload, t.len_[e]);
    put(payload, t.parent_[e]);
    put(payload, t.last_gen_[e]);
  }
  for (int32_t x : t.rmul_) put(payload, x);

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  uint64_t sum = fnv1a(payload);
  f.write(reinterpret_cast<const char*>(&kMagic), sizeof kMagic);
  f.write(reinterpret_cast<const char*>(&kVersion), sizeof kVersion);
  f.write(reinterpret_cast<const char*>(&sum), sizeof sum);
  f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  return static_cast<bool>(f);
}

bool GroupCache::load(const std::string& path, const RootSystem& rs,
                      const std::vector<SignedPerm>& gens, GroupTable* out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  uint32_t magic = 0, version = 0;
  uint64_t sum = 0;
  f.read(reinterpret_cast<char*>(&magic), sizeof magic);
  f.read(reinterpret_cast<char*>(&version), sizeof version);
  f.read(reinterpret_cast<char*>(&sum), sizeof sum);
  if (!f || magic != kMagic || version != kVersion) return false;
  std::vector<char> payload((std::istreambuf_iterator<char>(f)),
                            std::istreambuf_iterator<char>());
  if (fnv1a(payload) != sum) return false;

  size_t pos = 0;
  uint32_t order = 0, nroots = 0, ngens = 0;
  if (!get(payload, pos, &order) || !get(payload, pos, &nroots) || !get(payload, pos, &ngens))
    return false;
  if (nroots != static_cast<uint32_t>(rs.size()) || ngens != gens.size()) return false;

  // generator perms must match the requested build exactly
  for (uint32_t g = 0; g < ngens; ++g)
    for (uint32_t r = 0; r < nroots; ++r) {
      int16_t x;
      if (!get(payload, pos, &x) || x != gens[g][r]) return false;
    }

  GroupTable t;
  t.rs_ = &rs;
  t.gens_ = gens;
  t.elems_.assign(order, SignedPerm(nroots));
  for (uint32_t e = 0; e < order; ++e)
    for (uint32_t r = 0; r < nroots; ++r)
      if (!get(payload, pos, &t.elems_[e][r])) return false;
  t.len_.resize(order);
  t.parent_.resize(order);
  t.last_gen_.resize(order);
  for (uint32_t e = 0; e < order; ++e) {
    if (!get(payload, pos, &t.len_[e]) || !get(payload, pos, &t.parent_[e]) ||
        !get(payload, pos, &t.last_gen_[e]))
      return false;
  }
  t.rmul_.resize(static_cast<size_t>(order) * ngens);
  for (int32_t& x : t.rmul_)
    if (!get(payload, pos, &x)) return false;
  if (pos != payload.size()) return false;

  for (uint32_t e = 0; e < order; ++e) t.idx_[t.elems_[e]] = static_cast<int32_t>(e);
  try {
    t.finish_tables();
  } catch (const std::exception&) {
    return false;
  }
  *out = std::move(t);
  return true;
}

}  // namespace brauer
