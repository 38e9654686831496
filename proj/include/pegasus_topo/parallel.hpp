#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "pegasus_topo/coords.hpp"
#include "pegasus_topo/edge.hpp"
#include "pegasus_topo/graph.hpp"

namespace pegasus_topo {

struct GenerateOptions {
  // Worker threads for per-cell generation; 0 means hardware concurrency.
  unsigned threads = 1;
};

namespace detail {

// Runs emit(cell, out) for every cell of d, splitting cells into contiguous
// chunks across threads, then merges and canonicalizes. The result does not
// depend on the thread count.
template <typename Emit>
std::vector<Edge> generate_per_cell(const Dims& d, GenerateOptions opts, Emit emit) {
  const std::size_t cells = d.cell_count();
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : opts.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells, 1)));

  std::vector<std::vector<Edge>> parts(threads);
  auto work = [&](unsigned t) {
    const std::size_t begin = cells * t / threads;
    const std::size_t end = cells * (t + 1) / threads;
    for (std::size_t c = begin; c < end; ++c) emit(cell_from_index(c, d), d, parts[t]);
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    pool.clear();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<Edge> out;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.reserve(total);
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  canonicalize(out);
  return out;
}

}  // namespace detail
}  // namespace pegasus_topo
