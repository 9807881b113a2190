#pragma once

#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "macc/core_model.hpp"

namespace testutil {

inline std::string read_text(const std::string& name) {
  const std::string path = std::string(MACC_GOLDEN_DIR) + "/" + name;
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw std::runtime_error("missing golden file: " + path);
  std::ostringstream out;
  out << stream.rdbuf();
  return out.str();
}

inline macc::DemandVector identity_demands(const macc::SystemParams& params) {
  std::vector<int> d(params.num_users);
  std::iota(d.begin(), d.end(), 0);
  return macc::DemandVector::make(std::move(d), params);
}

// Every (K, k, z) with K in [kmin, kmax], k in [1, K], z in [2, K],
// gcd(k, K) = 1, N = K.
inline void for_each_valid_instance(int kmin, int kmax,
                                    const std::function<void(const macc::SystemParams&)>& fn) {
  for (int K = kmin; K <= kmax; ++K)
    for (int k = 1; k <= K; ++k) {
      if (std::gcd(k, K) != 1) continue;
      for (int z = 2; z <= K; ++z) fn(macc::SystemParams::make(K, K, k, z));
    }
}

}  // namespace testutil
