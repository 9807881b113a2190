#pragma once

#include <cstdint>
#include <vector>

namespace macc {

// The server library as bytes: N files of equal length. The length must be a
// multiple of `granularity` (K times the lcm of the schedule part counts) so
// every part boundary lands on a byte.
struct FileStore {
  std::vector<std::vector<std::uint8_t>> files;
  long long granularity = 0;

  long long file_size() const { return files.empty() ? 0 : static_cast<long long>(files[0].size()); }
};

}  // namespace macc
