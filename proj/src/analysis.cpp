#include "macc/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "macc/delivery.hpp"
#include "macc/errors.hpp"

namespace macc {

namespace {

void check_rate_args(int K, int k, int z) {
  if (K < 2) throw InvalidParamsError("K must be >= 2");
  if (k < 1 || k > K) throw InvalidParamsError("k must lie in [1, K]");
  if (z < 2) throw InvalidParamsError("z must be >= 2");
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

Rational rate_new(int K, int k, int z) {
  check_rate_args(K, k, z);
  const long long kz = static_cast<long long>(k) * z;
  const long long d = K - kz;
  if (d <= 0) return Rational(0);
  if (d == 1) return Rational(1, K);
  Rational total(0);
  if (d % 2 == 0) {
    for (long long r = d / 2 + 1; r <= d; ++r) total += Rational(2, 1 + ceil_div(kz, r));
  } else {
    total += Rational(1, ceil_div(2 * kz, d + 1) + 1);
    for (long long r = (d + 3) / 2; r <= d; ++r) total += Rational(2, 1 + ceil_div(kz, r));
  }
  return total;
}

Rational rate_ic(int K, int k, int z) {
  check_rate_args(K, k, z);
  const long long d = static_cast<long long>(K) - static_cast<long long>(k) * z;
  if (d <= 0) return Rational(0);
  return Rational(d * d, K);
}

Rational rate_lb(int K, int z, const Rational& gamma) {
  if (K < 2) throw InvalidParamsError("K must be >= 2");
  if (z < 1 || z > K) throw InvalidParamsError("z must lie in [1, K]");
  if (2 * z < K) throw DomainError("rate_lb is derived only for z >= K/2");
  if (gamma.sign() < 0) throw InvalidParamsError("gamma must be >= 0");
  const Rational slack(static_cast<long long>(K - z) * (K - z + 1), 2LL * K);
  const Rational kk(K);
  if (gamma <= Rational(1, K)) return kk - (kk - slack) * kk * gamma;
  if (gamma <= Rational(2, K)) return slack * (Rational(2) - kk * gamma);
  return Rational(0);
}

bool theorem2_check(int K, int k, int z) { return rate_new(K, k, z) <= rate_ic(K, k, z); }

bool corollary2_check(int K, int k) {
  const int z = K - 1;
  if (z < 2) throw InvalidParamsError("z = K-1 requires K >= 3");
  const Rational rate = rate_new(K, k, z);
  return k == 1 ? rate == Rational(1, K) : rate == Rational(0);
}

Subpacketization subpacketization_new(int K, int k, int z) {
  check_rate_args(K, k, z);
  long long max_pc = 1;
  long long lcm_pc = 1;
  for (const RoundShape& shape : round_shapes(K, k, z)) {
    max_pc = std::max(max_pc, static_cast<long long>(shape.part_count));
    lcm_pc = std::lcm(lcm_pc, static_cast<long long>(shape.part_count));
  }
  return Subpacketization{K * max_pc, K * lcm_pc};
}

long long subpacketization_ic(int K, int k, int z) {
  check_rate_args(K, k, z);
  const long long d = static_cast<long long>(K) - static_cast<long long>(k) * z;
  if (d < 0) throw InvalidParamsError("baseline sub-packetization needs k*z <= K");
  // C(d + k - 1, k - 1), exact at every step
  __int128 c = 1;
  for (long long i = 1; i <= k - 1; ++i) {
    c = c * (d + i) / i;
    if (c > static_cast<__int128>(INT64_MAX)) throw InvalidParamsError("binomial overflow");
  }
  __int128 total = c * K;
  if (total % k != 0) throw InvalidParamsError("baseline sub-packetization is not integral here");
  total /= k;
  if (total > static_cast<__int128>(INT64_MAX)) throw InvalidParamsError("sub-packetization overflow");
  return static_cast<long long>(total);
}

std::vector<RatePoint> rate_points(int K, int z) {
  std::vector<RatePoint> points;
  points.reserve(static_cast<std::size_t>(K) + 1);
  points.push_back(RatePoint{Rational(0), Rational(K)});  // no caches: ship everything
  for (int k = 1; k <= K; ++k) points.push_back(RatePoint{Rational(k, K), rate_new(K, k, z)});
  return points;
}

std::vector<RatePoint> convex_envelope(std::vector<RatePoint> points) {
  if (points.empty()) return {};
  std::sort(points.begin(), points.end(), [](const RatePoint& a, const RatePoint& b) {
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    return a.rate < b.rate;
  });
  // Equal gammas: only the lowest point can be a hull vertex.
  std::vector<RatePoint> unique;
  for (const RatePoint& p : points)
    if (unique.empty() || unique.back().gamma != p.gamma) unique.push_back(p);

  // Monotone chain, lower hull only. cross <= 0 means the middle point sits
  // on or above the chord, so it is not a strict vertex.
  auto cross = [](const RatePoint& o, const RatePoint& a, const RatePoint& b) {
    return (a.gamma - o.gamma) * (b.rate - o.rate) - (a.rate - o.rate) * (b.gamma - o.gamma);
  };
  std::vector<RatePoint> hull;
  for (const RatePoint& p : unique) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p).sign() <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

std::vector<SweepRow> sweep(int K, std::pair<int, int> k_range, std::pair<int, int> z_range) {
  if (K < 2) throw InvalidParamsError("K must be >= 2");
  if (k_range.first < 1 || k_range.second > K || k_range.first > k_range.second)
    throw InvalidParamsError("k range must lie within [1, K]");
  if (z_range.first < 2 || z_range.second > K || z_range.first > z_range.second)
    throw InvalidParamsError("z range must lie within [2, K]");
  std::vector<SweepRow> rows;
  for (int k = k_range.first; k <= k_range.second; ++k) {
    for (int z = z_range.first; z <= z_range.second; ++z) {
      SweepRow row;
      row.K = K;
      row.k = k;
      row.z = z;
      row.gamma = Rational(k, K);
      row.rate_new = rate_new(K, k, z);
      row.rate_ic = rate_ic(K, k, z);
      if (2 * z >= K) row.rate_lb = rate_lb(K, z, row.gamma);
      const Subpacketization sp = subpacketization_new(K, k, z);
      row.subpack_new_max = sp.per_round_max;
      row.subpack_new_lcm = sp.payload_lcm;
      if (static_cast<long long>(k) * z <= K) row.subpack_ic = subpacketization_ic(K, k, z);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace macc
