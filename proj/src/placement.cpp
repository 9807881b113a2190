#include "macc/placement.hpp"

namespace macc {

CacheContents place(const SystemParams& params) {
  const int K = params.num_users;
  const int k = params.cache_subfiles;
  CacheContents contents;
  contents.stored.resize(K);
  for (int c = 0; c < K; ++c) {
    contents.stored[c].reserve(k);
    for (int j = 0; j < k; ++j)
      contents.stored[c].push_back(mod_index(static_cast<long long>(k) * c + j, K));
  }
  return contents;
}

std::vector<int> user_view(int alpha, const CacheContents& contents, const SystemParams& params) {
  const int K = params.num_users;
  std::vector<char> seen(K, 0);
  std::vector<int> view;
  view.reserve(std::min(params.coverage(), K));
  for (int c = 0; c < params.access_degree; ++c) {
    for (int idx : contents.stored[mod_index(alpha + c, K)]) {
      if (!seen[idx]) {
        seen[idx] = 1;
        view.push_back(idx);
      }
    }
  }
  return view;
}

}  // namespace macc
