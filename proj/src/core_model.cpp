#include "macc/core_model.hpp"

#include <numeric>
#include <string>

#include "macc/errors.hpp"
#include "macc/prng.hpp"

namespace macc {

SystemParams SystemParams::make(int num_files, int num_users, int cache_subfiles,
                                int access_degree) {
  if (num_files < 1) throw InvalidParamsError("num_files must be >= 1");
  if (num_users < 2) throw InvalidParamsError("num_users must be >= 2");
  if (cache_subfiles < 1 || cache_subfiles > num_users)
    throw InvalidParamsError("cache_subfiles must lie in [1, num_users]");
  if (access_degree < 2 || access_degree > num_users)
    throw InvalidParamsError("access_degree must lie in [2, num_users]");
  SystemParams p{num_files, num_users, cache_subfiles, access_degree};
  if (!p.full_coverage() && std::gcd(cache_subfiles, num_users) != 1) {
    throw UnsupportedParametersError(
        "cache_subfiles must be invertible mod num_users when sub-files remain uncovered "
        "(gcd(k, K) = " +
        std::to_string(std::gcd(cache_subfiles, num_users)) + ")");
  }
  return p;
}

DemandVector DemandVector::make(std::vector<int> demands, const SystemParams& params) {
  if (static_cast<int>(demands.size()) != params.num_users)
    throw InvalidDemandsError("demand vector must have exactly one entry per user");
  for (int d : demands) {
    if (d < 0 || d >= params.num_files)
      throw InvalidDemandsError("demand index " + std::to_string(d) + " outside [0, N-1]");
  }
  return DemandVector{std::move(demands)};
}

DemandVector worst_case_demands(const SystemParams& params, std::uint64_t seed) {
  if (params.num_files < params.num_users)
    throw InvalidDemandsError("distinct demands require num_files >= num_users");
  std::vector<int> pool(params.num_files);
  for (int i = 0; i < params.num_files; ++i) pool[i] = i;
  SplitMix64 rng(seed);
  for (int i = params.num_files - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(params.num_users);
  return DemandVector{std::move(pool)};
}

int mod_index(long long x, int modulus) {
  if (modulus < 1) throw InvalidParamsError("modulus must be positive");
  long long m = x % modulus;
  if (m < 0) m += modulus;
  return static_cast<int>(m);
}

int mod_inverse(int value, int modulus) {
  // extended Euclid
  long long r0 = modulus, r1 = mod_index(value, modulus);
  long long s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1)
    throw UnsupportedParametersError("no inverse: gcd(" + std::to_string(value) + ", " +
                                     std::to_string(modulus) + ") != 1");
  return mod_index(s0, modulus);
}

int resolve_user(long long x, const SystemParams& params) {
  const int K = params.num_users;
  long long inv = mod_inverse(params.cache_subfiles, K);
  return mod_index(inv * mod_index(x, K), K);
}

std::vector<int> accessible_subfiles(int alpha, const SystemParams& params) {
  const int K = params.num_users;
  const int span = std::min(params.coverage(), K);
  const long long start = static_cast<long long>(params.cache_subfiles) * alpha;
  std::vector<int> out;
  out.reserve(span);
  for (int i = 0; i < span; ++i) out.push_back(mod_index(start + i, K));
  return out;
}

std::vector<int> missing_subfiles(int alpha, const SystemParams& params) {
  const int K = params.num_users;
  const int deficit = params.uncovered();
  if (deficit <= 0) return {};
  const long long start =
      static_cast<long long>(params.cache_subfiles) * (alpha + params.access_degree);
  std::vector<int> out;
  out.reserve(deficit);
  for (int i = 0; i < deficit; ++i) out.push_back(mod_index(start + i, K));
  return out;
}

}  // namespace macc
