#pragma once

#include <functional>

namespace actnet {

// Worker count used by batched evaluation. Resolved once from the
// ACTNET_THREADS environment variable (default: hardware concurrency,
// capped at 16). Results never depend on this value: work is split into
// fixed-size chunks and chunk results are reduced in index order.
int thread_count();

// Runs fn(chunk_index) for chunk_index in [0, n_chunks). Chunks may execute
// on different threads; each individual chunk runs sequentially.
void parallel_for_chunks(int n_chunks, const std::function<void(int)>& fn);

}  // namespace actnet
