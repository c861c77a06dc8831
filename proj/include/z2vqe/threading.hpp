#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace z2vqe {

// Global worker cap, settable once from the CLI (--threads). 0 = hardware.
int thread_cap();
void set_thread_cap(int cap);

// Runs fn(0..n-1) on up to thread_cap() workers. Each index is processed
// exactly once; callers write results into per-index slots so the outcome
// does not depend on scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace z2vqe
