#pragma once

#include <cstddef>
#include <functional>

namespace widthslab {

// Worker count for sweep parallelism: WIDTHS_LAB_THREADS if set (>= 1),
// otherwise the hardware concurrency. Read once per call; no global state.
unsigned thread_count();

// Runs fn(i) for i in [0, count). Work items must be independent; callers
// keep determinism by writing results into slot i of a pre-sized buffer,
// so the emission order never depends on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace widthslab
