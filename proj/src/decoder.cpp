#include "macc/decoder.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "macc/errors.hpp"

namespace macc {

const PlanEntry* DecodePlan::find(const PlanKey& key) const {
  for (const PlanEntry& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

DecodePlan lemma_decode_map(int alpha, const SystemParams& params) {
  DecodePlan plan;
  plan.user = alpha;
  const int K = params.num_users;
  const auto shapes = round_shapes(K, params.cache_subfiles, params.access_degree);
  const long long ka = static_cast<long long>(params.cache_subfiles) * alpha;
  const long long kaz =
      static_cast<long long>(params.cache_subfiles) * (alpha + params.access_degree);

  auto add = [&](int subfile, int part, int part_count, int r, long long shift,
                 SymbolVariant variant) {
    plan.entries.push_back(
        PlanEntry{PlanKey{subfile, part, part_count}, SymbolId{r, mod_index(shift, K), variant}});
  };

  for (const RoundShape& shape : shapes) {
    const int r = shape.r;
    const int p = shape.p;
    const int pc = shape.part_count;
    const int lag = mod_index(ka - r, K);  // sub-file behind the window start

    if (shape.head) {
      for (int l = 0; l < p; ++l)
        add(lag, l, pc, r, ka - static_cast<long long>(l + 1) * r, SymbolVariant::single);
      continue;
    }

    if (!shape.paired) {
      for (int l = 0; l < p / 2; ++l)
        add(lag, l, pc, r, ka - static_cast<long long>(l + 1) * r, SymbolVariant::single);
    } else {
      for (int l = 0; l <= (p - 3) / 2; ++l)
        add(lag, l, pc, r, ka - static_cast<long long>(l + 1) * r, SymbolVariant::first);
      for (int l = (p - 1) / 2; l < p; ++l)
        add(lag, l, pc, r, ka - static_cast<long long>(l - (p - 1) / 2 + 1) * r,
            SymbolVariant::second);
    }

    const int lead = mod_index(kaz + r - 1, K);  // sub-file just past the window end
    if (!shape.paired) {
      for (int l = 0; l < p / 2; ++l)
        add(lead, l, pc, r, kaz - 1 - static_cast<long long>(l + p / 2 - 1) * r,
            SymbolVariant::single);
    } else {
      for (int l = 0; l <= (p - 1) / 2; ++l)
        add(lead, l, pc, r, kaz - 1 - static_cast<long long>(l + (p - 1) / 2 - 1) * r,
            SymbolVariant::first);
      for (int l = (p + 1) / 2; l < p; ++l)
        add(lead, l, pc, r, kaz - 1 - static_cast<long long>(l - 1) * r, SymbolVariant::second);
    }
  }
  return plan;
}

bool verify_plan_consistency(const DecodePlan& plan, const TransmissionSchedule& schedule,
                             int alpha, const SystemParams& params) {
  const int K = params.num_users;
  std::vector<char> in_view(K, 0);
  for (int s : accessible_subfiles(alpha, params)) in_view[s] = 1;

  for (const PlanEntry& entry : plan.entries) {
    const CodedSymbol* sym =
        schedule.find(entry.symbol.round_r, entry.symbol.shift_j, entry.symbol.variant);
    if (sym == nullptr) return false;
    if (sym->part_count() != entry.key.part_count) return false;
    const TermRef* target = nullptr;
    int outside = 0;
    for (const TermRef& term : sym->terms) {
      if (!in_view[term.subfile]) {
        ++outside;
        if (term.subfile == entry.key.subfile && term.part == entry.key.part &&
            term.user == alpha)
          target = &term;
      }
    }
    if (target == nullptr || outside != 1) return false;
  }
  return true;
}

const std::vector<std::uint8_t>* UserCacheView::block(int file, int subfile) const {
  if (file < 0 || file >= static_cast<int>(blocks.size())) return nullptr;
  for (std::size_t i = 0; i < subfiles.size(); ++i)
    if (subfiles[i] == subfile) return &blocks[file][i];
  return nullptr;
}

namespace {

using PartKey = std::tuple<int, int, int, int>;  // file, subfile, part_count, part

void xor_into(std::vector<std::uint8_t>& dst, const std::uint8_t* src, long long len) {
  for (long long i = 0; i < len; ++i) dst[static_cast<std::size_t>(i)] ^= src[i];
}

std::string part_name(int file, int subfile, int part) {
  return "W[" + std::to_string(subfile) + "," + std::to_string(part) + "]^" +
         std::to_string(file);
}

}  // namespace

std::vector<std::uint8_t> peel_decode(int alpha, const SystemParams& params,
                                      const DemandVector& demands,
                                      const TransmissionSchedule& schedule,
                                      const UserCacheView& view, PeelReport* report) {
  const int K = params.num_users;
  const int wanted = demands.demands.at(static_cast<std::size_t>(alpha));
  const long long subfile_size = view.subfile_size;
  PeelReport stats;

  std::map<PartKey, std::vector<std::uint8_t>> recovered;
  const auto missing = missing_subfiles(alpha, params);

  auto demand_complete = [&]() {
    for (int s : missing) {
      int part_count = 0;
      for (const auto& [key, bytes] : recovered) {
        (void)bytes;
        if (std::get<0>(key) == wanted && std::get<1>(key) == s) {
          part_count = std::get<2>(key);
          break;
        }
      }
      if (part_count == 0) return false;
      for (int part = 0; part < part_count; ++part)
        if (recovered.count({wanted, s, part_count, part}) == 0) return false;
    }
    return true;
  };

  if (!missing.empty()) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (const Round& round : schedule.rounds) {
        const long long part_size = subfile_size / round.part_count;
        for (const CodedSymbol& sym : round.symbols) {
          if (static_cast<long long>(sym.payload.size()) != part_size)
            throw SizeMismatchError("symbol payload missing or of wrong length");
          const TermRef* unknown = nullptr;
          int unknown_count = 0;
          for (const TermRef& term : sym.terms) {
            const bool from_cache = view.block(term.file, term.subfile) != nullptr;
            const bool from_peel =
                recovered.count({term.file, term.subfile, term.part_count, term.part}) > 0;
            if (!from_cache && !from_peel) {
              unknown = &term;
              ++unknown_count;
            }
          }
          if (unknown_count != 1) continue;
          PartKey key{unknown->file, unknown->subfile, unknown->part_count, unknown->part};
          std::vector<std::uint8_t> value = sym.payload;
          for (const TermRef& term : sym.terms) {
            if (&term == unknown) continue;
            if (const auto* blk = view.block(term.file, term.subfile)) {
              xor_into(value, blk->data() + term.part * part_size, part_size);
            } else {
              xor_into(value,
                       recovered.at({term.file, term.subfile, term.part_count, term.part}).data(),
                       part_size);
            }
          }
          recovered.emplace(key, std::move(value));
          progressed = true;
          if (unknown->file == wanted) ++stats.symbols_used;
        }
      }
      if (progressed) ++stats.passes;
      if (stats.passes_for_demand == 0 && demand_complete()) stats.passes_for_demand = stats.passes;
    }

    // Every symbol that is now fully known must XOR to its payload; this is
    // where disagreeing recovery sources would surface.
    for (const Round& round : schedule.rounds) {
      const long long part_size = subfile_size / round.part_count;
      for (const CodedSymbol& sym : round.symbols) {
        std::vector<std::uint8_t> acc = sym.payload;
        bool all_known = true;
        for (const TermRef& term : sym.terms) {
          if (const auto* blk = view.block(term.file, term.subfile)) {
            xor_into(acc, blk->data() + term.part * part_size, part_size);
          } else if (auto it = recovered.find({term.file, term.subfile, term.part_count, term.part});
                     it != recovered.end()) {
            xor_into(acc, it->second.data(), part_size);
          } else {
            all_known = false;
            break;
          }
        }
        if (all_known && !std::all_of(acc.begin(), acc.end(), [](std::uint8_t b) { return b == 0; }))
          throw DecodeIncompleteError("recovered parts disagree across symbols at " +
                                      sym.label(schedule.round_base));
      }
    }
  }

  // Reassemble the demanded file: window sub-files straight from the view,
  // the rest from recovered parts.
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(subfile_size) * K);
  for (int s = 0; s < K; ++s) {
    if (const auto* blk = view.block(wanted, s)) {
      out.insert(out.end(), blk->begin(), blk->end());
      continue;
    }
    // Locate the granularity this sub-file was served at.
    int part_count = 0;
    for (const auto& [key, bytes] : recovered) {
      (void)bytes;
      if (std::get<0>(key) == wanted && std::get<1>(key) == s) {
        part_count = std::get<2>(key);
        break;
      }
    }
    if (part_count == 0)
      throw DecodeIncompleteError("user " + std::to_string(alpha) + " never recovered sub-file " +
                                  std::to_string(s) + " of file " + std::to_string(wanted));
    for (int part = 0; part < part_count; ++part) {
      auto it = recovered.find({wanted, s, part_count, part});
      if (it == recovered.end())
        throw DecodeIncompleteError("user " + std::to_string(alpha) + " missing " +
                                    part_name(wanted, s, part));
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
  }
  if (report != nullptr) *report = stats;
  return out;
}

std::map<PlanKey, std::vector<std::uint8_t>> apply_decode_plan(const DecodePlan& plan,
                                                               const TransmissionSchedule& schedule,
                                                               const UserCacheView& view) {
  std::map<PlanKey, std::vector<std::uint8_t>> out;
  for (const PlanEntry& entry : plan.entries) {
    const CodedSymbol* sym =
        schedule.find(entry.symbol.round_r, entry.symbol.shift_j, entry.symbol.variant);
    if (sym == nullptr)
      throw DecodeIncompleteError("plan entry names a symbol the schedule does not contain");
    const long long part_size = view.subfile_size / entry.key.part_count;
    if (static_cast<long long>(sym->payload.size()) != part_size)
      throw SizeMismatchError("symbol payload missing or of wrong length");
    std::vector<std::uint8_t> value = sym->payload;
    bool seen_target = false;
    for (const TermRef& term : sym->terms) {
      if (!seen_target && term.user == plan.user && term.subfile == entry.key.subfile &&
          term.part == entry.key.part) {
        seen_target = true;
        continue;
      }
      const auto* blk = view.block(term.file, term.subfile);
      if (blk == nullptr)
        throw DecodeIncompleteError("plan symbol " + sym->label(schedule.round_base) +
                                    " holds a second term outside the window: " +
                                    part_name(term.file, term.subfile, term.part));
      xor_into(value, blk->data() + term.part * part_size, part_size);
    }
    if (!seen_target)
      throw DecodeIncompleteError("plan symbol lacks the keyed part " +
                                  part_name(-1, entry.key.subfile, entry.key.part));
    out.emplace(entry.key, std::move(value));
  }
  return out;
}

}  // namespace macc
