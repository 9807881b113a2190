#include "macc/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "macc/decoder.hpp"
#include "macc/errors.hpp"

namespace macc {

namespace {

using nlohmann::json;

const char* variant_name(SymbolVariant v) {
  switch (v) {
    case SymbolVariant::single: return "single";
    case SymbolVariant::first: return "first";
    case SymbolVariant::second: return "second";
  }
  return "?";
}

json rates_fields(const SystemParams& p) {
  const int K = p.num_users, k = p.cache_subfiles, z = p.access_degree;
  const Subpacketization sp = subpacketization_new(K, k, z);
  json j;
  j["K"] = K;
  j["N"] = p.num_files;
  j["k"] = k;
  j["z"] = z;
  j["gamma"] = p.gamma().to_string();
  j["rate_new"] = rate_new(K, k, z).to_string();
  j["rate_ic"] = rate_ic(K, k, z).to_string();
  if (2 * z >= K)
    j["rate_lb"] = rate_lb(K, z, p.gamma()).to_string();
  else
    j["rate_lb"] = nullptr;
  j["subpack_new_max"] = sp.per_round_max;
  j["subpack_new_lcm"] = sp.payload_lcm;
  if (static_cast<long long>(k) * z <= K)
    j["subpack_ic"] = subpacketization_ic(K, k, z);
  else
    j["subpack_ic"] = nullptr;
  return j;
}

}  // namespace

std::string decimal6(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value.to_double());
  return buf;
}

std::string rational_with_decimal(const Rational& value) {
  if (value.den() == 1) return value.to_string();
  return value.to_string() + " (" + decimal6(value) + ")";
}

std::string rates_text(const SystemParams& p) {
  const int K = p.num_users, k = p.cache_subfiles, z = p.access_degree;
  const Subpacketization sp = subpacketization_new(K, k, z);
  std::string out;
  out += "instance: K=" + std::to_string(K) + " k=" + std::to_string(k) + " z=" +
         std::to_string(z) + " N=" + std::to_string(p.num_files) + "\n";
  out += "gamma           = " + rational_with_decimal(p.gamma()) + "\n";
  out += "rate_new        = " + rational_with_decimal(rate_new(K, k, z)) + "\n";
  out += "rate_ic         = " + rational_with_decimal(rate_ic(K, k, z)) + "\n";
  if (2 * z >= K)
    out += "rate_lb         = " + rational_with_decimal(rate_lb(K, z, p.gamma())) + "\n";
  else
    out += "rate_lb         = n/a (requires z >= K/2)\n";
  out += "subpack_new_max = " + std::to_string(sp.per_round_max) + "\n";
  out += "subpack_new_lcm = " + std::to_string(sp.payload_lcm) + "\n";
  if (static_cast<long long>(k) * z <= K)
    out += "subpack_ic      = " + std::to_string(subpacketization_ic(K, k, z)) + "\n";
  else
    out += "subpack_ic      = n/a (requires k*z <= K)\n";
  return out;
}

std::string rates_json(const SystemParams& params) { return rates_fields(params).dump(2) + "\n"; }

std::string rates_csv(const SystemParams& p) {
  const auto rows = sweep(p.num_users, {p.cache_subfiles, p.cache_subfiles},
                          {p.access_degree, p.access_degree});
  return sweep_csv(rows);
}

std::string placement_text(const CacheContents& contents) {
  std::string out;
  for (std::size_t c = 0; c < contents.stored.size(); ++c) {
    out += "M_" + std::to_string(c) + " = {";
    for (std::size_t i = 0; i < contents.stored[c].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(contents.stored[c][i]);
    }
    out += "}\n";
  }
  return out;
}

std::string schedule_json(const TransmissionSchedule& schedule) {
  json j;
  j["K"] = schedule.params.num_users;
  j["N"] = schedule.params.num_files;
  j["k"] = schedule.params.cache_subfiles;
  j["z"] = schedule.params.access_degree;
  j["round_base"] = schedule.round_base;
  j["total_rate"] = schedule.total_rate.to_string();
  j["rounds"] = json::array();
  for (const Round& round : schedule.rounds) {
    json jr;
    jr["r"] = round.r;
    jr["p"] = round.p;
    jr["part_count"] = round.part_count;
    jr["symbols"] = json::array();
    for (const CodedSymbol& sym : round.symbols) {
      json js;
      js["label"] = sym.label(schedule.round_base);
      js["shift"] = sym.shift_j;
      js["variant"] = variant_name(sym.variant);
      js["terms"] = json::array();
      for (const TermRef& term : sym.terms) {
        js["terms"].push_back({{"subfile", term.subfile},
                               {"part", term.part},
                               {"part_count", term.part_count},
                               {"user", term.user},
                               {"file", term.file}});
      }
      jr["symbols"].push_back(std::move(js));
    }
    j["rounds"].push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

std::string verify_table_text(const SystemParams& params, const DemandVector& demands) {
  const auto shapes = round_shapes(params.num_users, params.cache_subfiles, params.access_degree);
  const int round_base = shapes.empty() ? 0 : shapes.front().r;
  std::string out;
  for (int alpha = 0; alpha < params.num_users; ++alpha) {
    const DecodePlan plan = lemma_decode_map(alpha, params);
    const int file = demands.demands[alpha];
    for (const PlanEntry& entry : plan.entries) {
      CodedSymbol stub;
      stub.round_r = entry.symbol.round_r;
      stub.shift_j = entry.symbol.shift_j;
      stub.variant = entry.symbol.variant;
      out += "U" + std::to_string(alpha) + " W[" + std::to_string(entry.key.subfile) + "," +
             std::to_string(entry.key.part) + "]^" + std::to_string(file) + " " +
             stub.label(round_base) + "\n";
    }
  }
  return out;
}

std::string verify_json(const SystemParams& params, const DemandVector& demands,
                        const EndToEndReport& report, const TrialAggregate* trials) {
  const auto shapes = round_shapes(params.num_users, params.cache_subfiles, params.access_degree);
  const int round_base = shapes.empty() ? 0 : shapes.front().r;
  json j;
  j["K"] = params.num_users;
  j["N"] = params.num_files;
  j["k"] = params.cache_subfiles;
  j["z"] = params.access_degree;
  j["demands"] = demands.demands;
  j["users"] = json::array();
  for (int alpha = 0; alpha < params.num_users; ++alpha) {
    const DecodePlan plan = lemma_decode_map(alpha, params);
    json ju;
    ju["user"] = alpha;
    ju["success"] = static_cast<bool>(report.per_user_success[alpha]);
    ju["sources"] = json::array();
    for (const PlanEntry& entry : plan.entries) {
      CodedSymbol stub;
      stub.round_r = entry.symbol.round_r;
      stub.shift_j = entry.symbol.shift_j;
      stub.variant = entry.symbol.variant;
      ju["sources"].push_back({{"subfile", entry.key.subfile},
                               {"part", entry.key.part},
                               {"part_count", entry.key.part_count},
                               {"symbol", stub.label(round_base)}});
    }
    j["users"].push_back(std::move(ju));
  }
  j["all_success"] = report.all_success();
  j["symbols_sent"] = report.symbols_sent;
  j["bytes_sent"] = report.bytes_sent;
  j["measured_rate"] = report.measured_rate.to_string();
  j["formula_rate"] = report.formula_rate.to_string();
  j["rate_match"] = report.rate_match();
  if (trials != nullptr) {
    j["trials"] = {{"trials", trials->trials},
                   {"failures", trials->failures},
                   {"distinct_demand_vectors", trials->distinct_demand_vectors_tested}};
  }
  return j.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "K,k,z,gamma,rate_new,rate_ic,rate_lb,subpack_new_max,subpack_new_lcm,subpack_ic\n";
  for (const SweepRow& row : rows) {
    out += std::to_string(row.K) + "," + std::to_string(row.k) + "," + std::to_string(row.z) + ",";
    out += decimal6(row.gamma) + "," + decimal6(row.rate_new) + "," + decimal6(row.rate_ic) + ",";
    out += row.rate_lb ? decimal6(*row.rate_lb) : "";
    out += "," + std::to_string(row.subpack_new_max) + "," + std::to_string(row.subpack_new_lcm) +
           ",";
    out += row.subpack_ic ? std::to_string(*row.subpack_ic) : "";
    out += "\n";
  }
  return out;
}

std::string envelope_csv(int K, int z) {
  const auto points = rate_points(K, z);
  const auto hull = convex_envelope(points);
  auto on_hull = [&](const RatePoint& p) {
    for (const RatePoint& h : hull)
      if (h == p) return true;
    return false;
  };
  std::string out = "K,z,k,gamma,rate_new,hull_vertex\n";
  for (int k = 0; k <= K; ++k) {
    const RatePoint& p = points[static_cast<std::size_t>(k)];
    out += std::to_string(K) + "," + std::to_string(z) + "," + std::to_string(k) + ",";
    out += decimal6(p.gamma) + "," + decimal6(p.rate) + ",";
    out += on_hull(p) ? "1" : "0";
    out += "\n";
  }
  return out;
}

}  // namespace macc
