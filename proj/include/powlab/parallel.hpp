#ifndef POWLAB_PARALLEL_HPP
#define POWLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace powlab {

// Runs process(i) for every i in [0, count), distributing indices over the
// requested number of worker threads. Callers keep results deterministic by
// writing each index's output to its own slot and merging in index order.
void dispatch_indexed(std::size_t count, unsigned threads,
                      const std::function<void(std::size_t)>& process);

}  // namespace powlab

#endif
