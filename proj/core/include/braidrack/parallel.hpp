#pragma once

#include <cstddef>
#include <functional>

namespace braidrack {

// 0 means: THREADS environment variable if set, else hardware concurrency.
unsigned resolve_threads(unsigned requested);

// Calls body(i) for i in [0, count) on up to `threads` workers; work is
// claimed dynamically. The first exception thrown is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace braidrack
