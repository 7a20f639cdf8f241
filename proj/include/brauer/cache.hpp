#pragma once

#include <string>

#include "brauer/group.hpp"

namespace brauer {

// Optional on-disk cache for enumerated group tables.  Purely an
// optimisation: a missing, corrupt or stale file (checksum or parameter
// mismatch) just means the caller re-enumerates.  The layout is private
// to this build and carries a version tag plus an FNV-1a checksum.
struct GroupCache {
  static bool save(const std::string& path, const GroupTable& table);
  static bool load(const std::string& path, const RootSystem& rs,
                   const std::vector<SignedPerm>& gens, GroupTable* out);
};

std::string cache_file_for(const std::string& cache_dir, const std::string& system);

}  // namespace brauer
