#include "macc/harness.hpp"

#include <set>
#include <string>

#include "macc/analysis.hpp"
#include "macc/errors.hpp"
#include "macc/prng.hpp"

namespace macc {

FileStore synthesize_files(const SystemParams& params, long long schedule_granularity,
                           std::uint64_t seed, int scale) {
  if (schedule_granularity < 1) throw InvalidParamsError("granularity must be >= 1");
  if (scale < 1) throw InvalidParamsError("scale must be >= 1");
  FileStore store;
  store.granularity = schedule_granularity;
  const long long size = schedule_granularity * scale;
  store.files.resize(params.num_files);
  for (int n = 0; n < params.num_files; ++n) {
    // Distinct stream per file so stores stay comparable across N.
    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n + 1)));
    auto& file = store.files[n];
    file.resize(static_cast<std::size_t>(size));
    std::size_t i = 0;
    while (i < file.size()) {
      std::uint64_t word = rng.next();
      for (int b = 0; b < 8 && i < file.size(); ++b, ++i) {
        file[i] = static_cast<std::uint8_t>(word & 0xff);
        word >>= 8;
      }
    }
  }
  return store;
}

UserCacheView materialize_view(int alpha, const FileStore& store, const SystemParams& params) {
  const int K = params.num_users;
  const long long file_size = store.file_size();
  if (file_size <= 0 || file_size % K != 0)
    throw SizeMismatchError("file size must be a positive multiple of K");
  UserCacheView view;
  view.user = alpha;
  view.subfile_size = file_size / K;
  view.subfiles = accessible_subfiles(alpha, params);
  view.blocks.resize(store.files.size());
  for (std::size_t n = 0; n < store.files.size(); ++n) {
    view.blocks[n].reserve(view.subfiles.size());
    for (int s : view.subfiles) {
      const auto begin = store.files[n].begin() + static_cast<std::ptrdiff_t>(s * view.subfile_size);
      view.blocks[n].emplace_back(begin, begin + static_cast<std::ptrdiff_t>(view.subfile_size));
    }
  }
  return view;
}

bool EndToEndReport::all_success() const {
  for (bool ok : per_user_success)
    if (!ok) return false;
  return !per_user_success.empty();
}

EndToEndReport end_to_end(const SystemParams& params, const DemandVector& demands,
                          std::uint64_t seed, int scale) {
  TransmissionSchedule schedule = build_schedule(params, demands);
  FileStore store = synthesize_files(params, payload_granularity(schedule), seed, scale);
  encode_payloads(schedule, store);

  EndToEndReport report;
  report.formula_rate = rate_new(params.num_users, params.cache_subfiles, params.access_degree);
  for (const Round& round : schedule.rounds)
    for (const CodedSymbol& sym : round.symbols) {
      ++report.symbols_sent;
      report.bytes_sent += static_cast<long long>(sym.payload.size());
    }
  report.measured_rate = Rational(report.bytes_sent, store.file_size());

  report.per_user_success.resize(params.num_users, false);
  for (int alpha = 0; alpha < params.num_users; ++alpha) {
    const UserCacheView view = materialize_view(alpha, store, params);
    const auto rebuilt = peel_decode(alpha, params, demands, schedule, view);
    report.per_user_success[alpha] = rebuilt == store.files[demands.demands[alpha]];
  }
  return report;
}

TrialAggregate randomized_trials(const SystemParams& params, int num_trials, std::uint64_t seed) {
  if (num_trials < 0) throw InvalidParamsError("num_trials must be >= 0");
  TrialAggregate agg;
  std::set<std::vector<int>> seen;
  SplitMix64 rng(seed);
  for (int trial = 0; trial < num_trials; ++trial) {
    const std::uint64_t demand_seed = rng.next();
    const std::uint64_t byte_seed = rng.next();
    const DemandVector demands = worst_case_demands(params, demand_seed);
    seen.insert(demands.demands);
    const EndToEndReport report = end_to_end(params, demands, byte_seed, 1);
    ++agg.trials;
    if (!report.all_success() || !report.rate_match()) ++agg.failures;
  }
  agg.distinct_demand_vectors_tested = static_cast<long long>(seen.size());
  return agg;
}

}  // namespace macc
