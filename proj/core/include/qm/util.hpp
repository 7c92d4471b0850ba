#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace qm {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string_i128(i128 v);

// floor(sqrt(n)), exact for 0 <= n < 2^62.
i64 isqrt64(i64 n);

inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

// Narrow with a range check; sums and coordinates must stay at desk scale.
i64 narrow_i64(i128 v);

// Worker count: QM_THREADS env var when set, hardware concurrency otherwise.
unsigned thread_count();

// Runs fn(chunk) for chunk in [0, n_chunks) on a transient pool. Chunk
// boundaries are caller-fixed, so reductions done in chunk order are
// deterministic regardless of the thread count.
void parallel_for(std::size_t n_chunks, const std::function<void(std::size_t)>& fn);

}  // namespace qm
