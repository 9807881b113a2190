#pragma once

#include <cstdint>
#include <vector>

#include "macc/core_model.hpp"
#include "macc/decoder.hpp"
#include "macc/delivery.hpp"
#include "macc/file_store.hpp"
#include "macc/rational.hpp"

namespace macc {

// N files of deterministic pseudo-random bytes, each of length
// schedule_granularity * scale.
FileStore synthesize_files(const SystemParams& params, long long schedule_granularity,
                           std::uint64_t seed, int scale);

// Copies the bytes of every accessible sub-file of every file into the
// user's side-information view.
UserCacheView materialize_view(int alpha, const FileStore& store, const SystemParams& params);

struct EndToEndReport {
  std::vector<bool> per_user_success;
  Rational measured_rate;   // bytes_sent / file size
  Rational formula_rate;    // closed form for the instance
  long long symbols_sent = 0;
  long long bytes_sent = 0;

  bool all_success() const;
  bool rate_match() const { return measured_rate == formula_rate; }
};

// Full pipeline on synthetic bytes: place, schedule, encode, decode every
// user, and compare each reconstruction bit for bit.
EndToEndReport end_to_end(const SystemParams& params, const DemandVector& demands,
                          std::uint64_t seed, int scale);

struct TrialAggregate {
  long long trials = 0;
  long long failures = 0;
  long long distinct_demand_vectors_tested = 0;
};

// Repeats end_to_end with a fresh distinct demand vector and fresh file bytes
// per trial. A trial fails on any bit mismatch or rate mismatch.
TrialAggregate randomized_trials(const SystemParams& params, int num_trials, std::uint64_t seed);

}  // namespace macc
