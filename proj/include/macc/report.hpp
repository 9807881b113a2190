#pragma once

#include <string>
#include <vector>

#include "macc/analysis.hpp"
#include "macc/core_model.hpp"
#include "macc/delivery.hpp"
#include "macc/harness.hpp"
#include "macc/placement.hpp"
#include "macc/rational.hpp"

namespace macc {

// Decimal rendering at 6 significant digits, used in CSV output.
std::string decimal6(const Rational& value);

// "p/q (decimal)" for human-readable reports.
std::string rational_with_decimal(const Rational& value);

// Single-instance report: gamma, both rates, the lower bound when it applies,
// and both sub-packetization numbers.
std::string rates_text(const SystemParams& params);
std::string rates_json(const SystemParams& params);
std::string rates_csv(const SystemParams& params);

// "M_c = {i1,...,ik}" lines.
std::string placement_text(const CacheContents& contents);

std::string schedule_json(const TransmissionSchedule& schedule);

// One line per decoded part across all users: "U<a> W[s,l]^f <symbol>".
std::string verify_table_text(const SystemParams& params, const DemandVector& demands);
std::string verify_json(const SystemParams& params, const DemandVector& demands,
                        const EndToEndReport& report, const TrialAggregate* trials = nullptr);

// Header: K,k,z,gamma,rate_new,rate_ic,rate_lb,subpack_new_max,subpack_new_lcm,subpack_ic
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Header: K,z,k,gamma,rate_new,hull_vertex. Row k = 0 is the empty-cache
// anchor (0, K).
std::string envelope_csv(int K, int z);

}  // namespace macc
