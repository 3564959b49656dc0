// Deterministic data-parallel helper for sweep loops: the index range is
// split into a fixed contiguous partition, so per-chunk reductions merge in
// a scheduling-independent order.

#pragma once

#include <cstddef>
#include <functional>

namespace laguerre {

/// Worker count: LAGUERRE_THREADS if set, otherwise hardware concurrency.
int thread_count();

/// Number of chunks parallel_chunks will use for a range of length n.
std::size_t parallel_chunk_count(std::size_t n);

/// Invokes fn(chunk_index, begin, end) over a contiguous partition of
/// [0, n). The partition depends only on n and the worker count.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace laguerre
