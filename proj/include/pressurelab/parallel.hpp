#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace plab {

// Worker cap from PRESSURELAB_THREADS (default 1). Results never depend on
// the thread count: work is split into fixed-size chunks and partial results
// are combined in chunk order.
int thread_count();

constexpr size_t kParallelChunk = 8192;

// Runs fn(chunk_index, begin, end) over [0, n) in fixed chunks. Chunks may
// execute on different threads; fn must only touch chunk-local state.
void for_each_chunk(size_t n, const std::function<void(size_t, size_t, size_t)>& fn);

// Deterministic reductions (partials combined in chunk order).
double parallel_sum(size_t n, const std::function<double(size_t)>& term);
std::uint64_t parallel_count(size_t n, const std::function<bool(size_t)>& pred);

}  // namespace plab
