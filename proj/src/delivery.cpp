#include "macc/delivery.hpp"

#include <cassert>
#include <numeric>

#include "macc/errors.hpp"

namespace macc {

std::string CodedSymbol::label(int round_base) const {
  std::string s = "T[" + std::to_string(shift_j);
  if (variant == SymbolVariant::first) s += ",1";
  if (variant == SymbolVariant::second) s += ",2";
  s += "]^" + std::to_string(round_r - round_base);
  return s;
}

std::vector<RoundShape> round_shapes(int K, int k, int z) {
  std::vector<RoundShape> shapes;
  const long long kz = static_cast<long long>(k) * z;
  if (kz >= K) return shapes;
  const int deficit = K - static_cast<int>(kz);
  const bool odd = (deficit % 2) != 0;
  const int t = odd ? (deficit + 1) / 2 : (deficit + 2) / 2;
  for (int r = t; r <= deficit; ++r) {
    RoundShape s;
    s.r = r;
    s.p = static_cast<int>((kz + r - 1) / r) + 1;  // ceil(kz/r) + 1
    if (odd && r == t) {
      // Head round: one symbol per shift over p parts, serving one sub-file
      // per user instead of two.
      s.part_count = s.p;
      s.head = true;
    } else if (s.p % 2 == 0) {
      s.part_count = s.p / 2;
    } else {
      s.part_count = s.p;
      s.paired = true;
    }
    shapes.push_back(s);
  }
  return shapes;
}

namespace {

// Term construction. Within a round every symbol mixes two families:
// leading terms (sub-file i*r+j serving the user whose lagging sub-file
// k*alpha - r it is) and trailing terms (same sub-file index, serving the
// user whose window ends just before it, k*(alpha+z)+r-1 = i*r+j). Trailing
// demand indices carry the fixed shift K-kz+1.
struct TermBuilder {
  const SystemParams& params;
  const std::vector<int>& demands;
  int r;
  int part_count;
  int inverse_k;  // k^-1 mod K

  int user_at(long long x) const {
    const int K = params.num_users;
    return mod_index(static_cast<long long>(inverse_k) * mod_index(x, K), K);
  }

  TermRef leading(int i, int j, int part) const {
    const int K = params.num_users;
    const int user = user_at(static_cast<long long>(i + 1) * r + j);
    return TermRef{mod_index(static_cast<long long>(i) * r + j, K), part, part_count, user,
                   demands[user]};
  }

  TermRef trailing(int i, int j, int part) const {
    const int K = params.num_users;
    const int shift = params.uncovered() + 1;  // K - kz + 1
    const int user = user_at(static_cast<long long>(i - 1) * r + j + shift);
    return TermRef{mod_index(static_cast<long long>(i) * r + j, K), part, part_count, user,
                   demands[user]};
  }
};

}  // namespace

TransmissionSchedule build_schedule(const SystemParams& params, const DemandVector& demands) {
  if (static_cast<int>(demands.demands.size()) != params.num_users)
    throw InvalidDemandsError("demand vector must have exactly one entry per user");
  for (int d : demands.demands)
    if (d < 0 || d >= params.num_files)
      throw InvalidDemandsError("demand index " + std::to_string(d) + " outside [0, N-1]");

  TransmissionSchedule sched;
  sched.params = params;
  const int K = params.num_users;
  const auto shapes = round_shapes(K, params.cache_subfiles, params.access_degree);
  if (shapes.empty()) return sched;  // full coverage, nothing to transmit

  sched.round_base = shapes.front().r;
  const int inv = mod_inverse(params.cache_subfiles, K);
  for (const RoundShape& shape : shapes) {
    Round round{shape.r, shape.p, shape.part_count, {}};
    round.symbols.reserve(shape.paired ? 2 * K : K);
    TermBuilder tb{params, demands.demands, shape.r, shape.part_count, inv};
    const int p = shape.p;
    for (int j = 0; j < K; ++j) {
      if (shape.head) {
        CodedSymbol sym{shape.r, j, SymbolVariant::single, {}, {}};
        for (int i = 0; i < p; ++i) sym.terms.push_back(tb.leading(i, j, i));
        round.symbols.push_back(std::move(sym));
      } else if (!shape.paired) {
        // p even, sub-files split p/2 ways
        CodedSymbol sym{shape.r, j, SymbolVariant::single, {}, {}};
        for (int i = 0; i < p / 2; ++i) sym.terms.push_back(tb.leading(i, j, i));
        for (int i = p / 2; i < p; ++i) sym.terms.push_back(tb.trailing(i, j, i - p / 2));
        round.symbols.push_back(std::move(sym));
      } else {
        // p odd, sub-files split p ways, two symbols per shift
        CodedSymbol one{shape.r, j, SymbolVariant::first, {}, {}};
        for (int i = 0; i <= (p - 3) / 2; ++i) one.terms.push_back(tb.leading(i, j, i));
        for (int i = (p - 1) / 2; i < p; ++i)
          one.terms.push_back(tb.trailing(i, j, i - (p - 1) / 2));
        CodedSymbol two{shape.r, j, SymbolVariant::second, {}, {}};
        for (int i = 0; i <= (p - 1) / 2; ++i) two.terms.push_back(tb.leading(i, j, (p - 1) / 2 + i));
        for (int i = (p + 1) / 2; i < p; ++i) two.terms.push_back(tb.trailing(i, j, i));
        round.symbols.push_back(std::move(one));
        round.symbols.push_back(std::move(two));
      }
    }
    sched.rounds.push_back(std::move(round));
  }
  sched.total_rate = schedule_rate(sched);
  return sched;
}

const CodedSymbol* TransmissionSchedule::find(int round_r, int shift_j,
                                              SymbolVariant variant) const {
  for (const Round& round : rounds) {
    if (round.r != round_r) continue;
    for (const CodedSymbol& sym : round.symbols)
      if (sym.shift_j == shift_j && sym.variant == variant) return &sym;
    return nullptr;
  }
  return nullptr;
}

std::size_t TransmissionSchedule::symbol_count() const {
  std::size_t n = 0;
  for (const Round& round : rounds) n += round.symbols.size();
  return n;
}

Rational schedule_rate(const TransmissionSchedule& schedule) {
  const int K = schedule.params.num_users;
  Rational total(0);
  for (const Round& round : schedule.rounds)
    total += Rational(static_cast<long long>(round.symbols.size()),
                      static_cast<long long>(K) * round.part_count);
  return total;
}

long long payload_granularity(const TransmissionSchedule& schedule) {
  long long l = 1;
  for (const Round& round : schedule.rounds) l = std::lcm(l, static_cast<long long>(round.part_count));
  return static_cast<long long>(schedule.params.num_users) * l;
}

void encode_payloads(TransmissionSchedule& schedule, const FileStore& store) {
  const int K = schedule.params.num_users;
  if (static_cast<int>(store.files.size()) < schedule.params.num_files)
    throw SizeMismatchError("file store holds fewer files than the instance expects");
  const long long file_size = store.file_size();
  for (const auto& f : store.files)
    if (static_cast<long long>(f.size()) != file_size)
      throw SizeMismatchError("files must all have equal size");
  const long long need = payload_granularity(schedule);
  if (file_size <= 0 || file_size % need != 0)
    throw SizeMismatchError("file size " + std::to_string(file_size) +
                            " is not a positive multiple of " + std::to_string(need));
  const long long subfile_size = file_size / K;
  for (Round& round : schedule.rounds) {
    const long long part_size = subfile_size / round.part_count;
    for (CodedSymbol& sym : round.symbols) {
      sym.payload.assign(static_cast<std::size_t>(part_size), 0);
      for (const TermRef& term : sym.terms) {
        assert(term.part_count == round.part_count);
        const auto& file = store.files[term.file];
        const long long off =
            static_cast<long long>(term.subfile) * subfile_size + static_cast<long long>(term.part) * part_size;
        for (long long b = 0; b < part_size; ++b)
          sym.payload[static_cast<std::size_t>(b)] ^= file[static_cast<std::size_t>(off + b)];
      }
    }
  }
}

std::string symbol_to_text(const CodedSymbol& symbol, int round_base) {
  std::string line = symbol.label(round_base) + " =";
  bool first = true;
  for (const TermRef& term : symbol.terms) {
    line += first ? " " : " + ";
    first = false;
    line += "W[" + std::to_string(term.subfile) + "," + std::to_string(term.part) + "]^" +
            std::to_string(term.file);
  }
  return line;
}

std::string schedule_to_text(const TransmissionSchedule& schedule) {
  std::string out;
  for (const Round& round : schedule.rounds)
    for (const CodedSymbol& sym : round.symbols) {
      out += symbol_to_text(sym, schedule.round_base);
      out += '\n';
    }
  return out;
}

}  // namespace macc
