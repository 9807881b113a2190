#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "macc/rational.hpp"

namespace macc {

struct RatePoint {
  Rational gamma;
  Rational rate;

  bool operator==(const RatePoint&) const = default;
};

// Achievable rate of the cyclic scheme, exactly. With d = K - k*z:
//   d <= 0            -> 0
//   d == 1            -> 1/K
//   d even            -> 2 * sum_{r=d/2+1}^{d} 1/(1 + ceil(kz/r))
//   d odd,  d > 1     -> 1/(ceil(2kz/(d+1)) + 1) + sum_{r=(d+3)/2}^{d} 2/(1 + ceil(kz/r))
// No gcd condition: this is a closed form over (K, k, z).
Rational rate_new(int K, int k, int z);

// Index-coding baseline: (K - k*z)^2 / K, clamped to 0 once k*z >= K.
Rational rate_ic(int K, int k, int z);

// Uncoded-placement lower bound, derived only for z >= K/2 (DomainError
// otherwise). Piecewise linear in gamma with breakpoints at 1/K and 2/K.
Rational rate_lb(int K, int z, const Rational& gamma);

// rate_new <= rate_ic for this instance.
bool theorem2_check(int K, int k, int z);

// z = K-1 endpoint: rate 1/K at k = 1, zero for k >= 2.
bool corollary2_check(int K, int k);

struct Subpacketization {
  long long per_round_max = 0;  // K * max round part count
  long long payload_lcm = 0;    // K * lcm of round part counts
};

Subpacketization subpacketization_new(int K, int k, int z);

// Baseline level: C(K-kz+k-1, k-1) * K / k. Requires K - k*z >= 0.
long long subpacketization_ic(int K, int k, int z);

// The (gamma, rate) points of one z: (0, K) plus (k/K, rate_new) for k = 1..K.
std::vector<RatePoint> rate_points(int K, int z);

// Strict lower convex hull vertices, ascending in gamma. Collinear interior
// points are dropped; every input point lies on or above the hull.
std::vector<RatePoint> convex_envelope(std::vector<RatePoint> points);

struct SweepRow {
  int K = 0;
  int k = 0;
  int z = 0;
  Rational gamma;
  Rational rate_new;
  Rational rate_ic;
  std::optional<Rational> rate_lb;       // only for z >= K/2
  long long subpack_new_max = 0;
  long long subpack_new_lcm = 0;
  std::optional<long long> subpack_ic;   // only for k*z <= K
};

// One row per (k, z) in the given inclusive ranges, k ascending then z.
std::vector<SweepRow> sweep(int K, std::pair<int, int> k_range, std::pair<int, int> z_range);

}  // namespace macc
