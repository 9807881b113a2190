#pragma once

#include <cstdint>
#include <vector>

#include "macc/rational.hpp"

namespace macc {

// One problem instance. N files are each split into K sub-files (indices run
// mod K), every cache stores k consecutive sub-file indices of every file,
// and every user reads z consecutive caches with cyclic wrap-around.
struct SystemParams {
  int num_files = 0;       // N
  int num_users = 0;       // K, also the number of caches and sub-files
  int cache_subfiles = 0;  // k
  int access_degree = 0;   // z

  int coverage() const { return cache_subfiles * access_degree; }  // k*z
  int uncovered() const { return num_users - coverage(); }         // K - k*z
  bool full_coverage() const { return coverage() >= num_users; }
  Rational gamma() const { return Rational(cache_subfiles, num_users); }

  // Validates ranges (N >= 1, K >= 2, 1 <= k <= K, 2 <= z <= K) and rejects
  // instances with gcd(k, K) != 1 that still leave sub-files uncovered;
  // demand resolution needs k invertible mod K in that case.
  static SystemParams make(int num_files, int num_users, int cache_subfiles, int access_degree);
};

// Per-user requested file indices, length exactly K.
struct DemandVector {
  std::vector<int> demands;

  static DemandVector make(std::vector<int> demands, const SystemParams& params);
};

// Distinct demands drawn as a seeded shuffle of [0, N-1] truncated to K
// entries. Requires N >= K.
DemandVector worst_case_demands(const SystemParams& params, std::uint64_t seed);

// x reduced into [0, modulus-1], correct for negative x.
int mod_index(long long x, int modulus);

// Multiplicative inverse mod modulus; throws UnsupportedParametersError when
// gcd(value, modulus) != 1.
int mod_inverse(int value, int modulus);

// The user alpha with k*alpha == x (mod K), i.e. alpha = k^-1 * x mod K.
int resolve_user(long long x, const SystemParams& params);

// Sub-file indices user alpha reaches through its z caches: the cyclic window
// of k*z consecutive indices starting at k*alpha, size min(k*z, K).
std::vector<int> accessible_subfiles(int alpha, const SystemParams& params);

// The complement, in delivery order: k*(alpha+z)+i mod K for i in
// [0, K-k*z-1]. Empty when the window already covers everything.
std::vector<int> missing_subfiles(int alpha, const SystemParams& params);

}  // namespace macc
