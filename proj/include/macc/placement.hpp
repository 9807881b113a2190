#pragma once

#include <vector>

#include "macc/core_model.hpp"

namespace macc {

// Uncoded placement: cache c stores sub-file indices {k*c + j mod K : j < k}
// of every file, a k/K fraction of the library per cache.
struct CacheContents {
  std::vector<std::vector<int>> stored;  // [cache] -> k sub-file indices
};

CacheContents place(const SystemParams& params);

// Union of the contents of caches {alpha, ..., alpha+z-1 mod K}, in window
// order. Always equals accessible_subfiles(alpha, params).
std::vector<int> user_view(int alpha, const CacheContents& contents, const SystemParams& params);

}  // namespace macc
