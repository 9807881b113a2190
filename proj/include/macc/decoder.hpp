#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "macc/core_model.hpp"
#include "macc/delivery.hpp"

namespace macc {

struct SymbolId {
  int round_r = 0;
  int shift_j = 0;
  SymbolVariant variant = SymbolVariant::single;

  auto operator<=>(const SymbolId&) const = default;
};

// One part of one missing sub-file of the demanded file.
struct PlanKey {
  int subfile = 0;
  int part = 0;
  int part_count = 1;

  auto operator<=>(const PlanKey&) const = default;
};

struct PlanEntry {
  PlanKey key;
  SymbolId symbol;
};

// Where user `user` reads each missing part from. Entries are kept in decode
// order (rounds ascending, lagging sub-file before leading sub-file, parts
// ascending); keys are unique and tile the user's missing parts exactly.
struct DecodePlan {
  int user = -1;
  std::vector<PlanEntry> entries;

  const PlanEntry* find(const PlanKey& key) const;
};

// The closed-form source map: part l of the lagging sub-file k*alpha-r comes
// from the symbol at shift k*alpha-(l+1)*r (split across the pair when the
// round is paired), and part l of the leading sub-file k*(alpha+z)+r-1 from
// shift k*(alpha+z)-1-(l+part_count offsets)*r. Empty for full coverage.
DecodePlan lemma_decode_map(int alpha, const SystemParams& params);

// True iff every entry's symbol carries the keyed part as a term for this
// user and that term is the only one outside the user's window.
bool verify_plan_consistency(const DecodePlan& plan, const TransmissionSchedule& schedule,
                             int alpha, const SystemParams& params);

// The side information one user holds: every accessible sub-file of every
// file, as bytes.
struct UserCacheView {
  int user = -1;
  long long subfile_size = 0;
  std::vector<int> subfiles;                                    // accessible indices
  std::vector<std::vector<std::vector<std::uint8_t>>> blocks;   // [file][pos in subfiles]

  const std::vector<std::uint8_t>* block(int file, int subfile) const;
};

struct PeelReport {
  int passes = 0;              // peeling sweeps that recovered anything
  int passes_for_demand = 0;   // sweeps needed until the demanded file was complete
  long long symbols_used = 0;  // symbols that yielded a part of the demanded file
};

// Generic decoder: for every symbol whose terms are all view-resident except
// one, XOR the known terms out of the payload to expose the unknown part.
// Returns the reassembled demanded file; throws DecodeIncompleteError if a
// missing part is never isolated or two recoveries disagree.
std::vector<std::uint8_t> peel_decode(int alpha, const SystemParams& params,
                                      const DemandVector& demands,
                                      const TransmissionSchedule& schedule,
                                      const UserCacheView& view, PeelReport* report = nullptr);

// Reads each planned part straight from its mapped symbol, XORing out the
// view-resident terms. The second, independent route checked against peeling.
std::map<PlanKey, std::vector<std::uint8_t>> apply_decode_plan(const DecodePlan& plan,
                                                               const TransmissionSchedule& schedule,
                                                               const UserCacheView& view);

}  // namespace macc
