#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "macc/core_model.hpp"
#include "macc/file_store.hpp"
#include "macc/rational.hpp"

namespace macc {

// Whether a symbol is the round's only one for its shift (T[j]) or one of the
// split pair (T[j,1] / T[j,2]) used when the round splits sub-files an odd
// number of ways.
enum class SymbolVariant { single, first, second };

// One XOR term: part `part` (out of `part_count`) of sub-file `subfile` of
// file `file`, serving `user` (the user this part is delivered to).
struct TermRef {
  int subfile = 0;
  int part = 0;
  int part_count = 1;
  int user = 0;
  int file = 0;

  bool operator==(const TermRef&) const = default;
};

struct CodedSymbol {
  int round_r = 0;
  int shift_j = 0;
  SymbolVariant variant = SymbolVariant::single;
  std::vector<TermRef> terms;
  std::vector<std::uint8_t> payload;  // filled by encode_payloads

  int part_count() const { return terms.empty() ? 1 : terms.front().part_count; }
  // "T[j]^e" or "T[j,1|2]^e" with e = round_r - round_base.
  std::string label(int round_base) const;
};

// Per-round structure shared by the scheduler and the analytics: p is the
// split parameter ceil(kz/r)+1; part_count the number of parts each sub-file
// is cut into; `paired` rounds emit 2K symbols, others K; the `head` round is
// the opening round of an odd deficit, which serves one sub-file per user.
struct RoundShape {
  int r = 0;
  int p = 0;
  int part_count = 1;
  bool paired = false;
  bool head = false;
};

// Empty when k*z >= K. Rounds run r = t .. K-kz with t = (K-kz+2)/2 for even
// deficits and t = (K-kz+1)/2 for odd ones.
std::vector<RoundShape> round_shapes(int K, int k, int z);

struct Round {
  int r = 0;
  int p = 0;
  int part_count = 1;
  std::vector<CodedSymbol> symbols;
};

struct TransmissionSchedule {
  SystemParams params;
  int round_base = 0;  // t; symbol superscripts count rounds from here
  std::vector<Round> rounds;
  Rational total_rate;

  const CodedSymbol* find(int round_r, int shift_j, SymbolVariant variant) const;
  std::size_t symbol_count() const;
};

// All coded symbols for one demand vector. Symbol order is deterministic:
// rounds ascending in r, shifts ascending, variant first before second.
TransmissionSchedule build_schedule(const SystemParams& params, const DemandVector& demands);

// Sum of symbol sizes, each 1/(K * part_count) in file units.
Rational schedule_rate(const TransmissionSchedule& schedule);

// K * lcm of the schedule's part counts: the file-length divisor payload
// encoding needs.
long long payload_granularity(const TransmissionSchedule& schedule);

// XORs the referenced part byte ranges into each symbol's payload. Every file
// length must be a positive multiple of payload_granularity(schedule).
void encode_payloads(TransmissionSchedule& schedule, const FileStore& store);

// One line per symbol: "T[j]^e = W[subfile,part]^file + ...". Bit-exact
// format used by golden tests and the schedule subcommand.
std::string symbol_to_text(const CodedSymbol& symbol, int round_base);
std::string schedule_to_text(const TransmissionSchedule& schedule);

}  // namespace macc
