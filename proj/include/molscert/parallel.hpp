#ifndef MOLSCERT_PARALLEL_HPP
#define MOLSCERT_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace molscert::detail {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, count) into contiguous chunks and runs fn(begin, end, chunk_index)
// on up to `threads` workers. Chunk boundaries are a function of count and the
// chunk count only, and callers merge per-chunk results in chunk order, so the
// outcome does not depend on scheduling or thread count.
template <typename Fn>
void for_chunks(std::size_t count, int threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (count == 0) return;
  std::size_t nchunks = static_cast<std::size_t>(threads);
  if (nchunks > count) nchunks = count;
  if (nchunks <= 1) {
    fn(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(nchunks);
  std::size_t per = count / nchunks, extra = count % nchunks, begin = 0;
  for (std::size_t c = 0; c < nchunks; ++c) {
    std::size_t end = begin + per + (c < extra ? 1 : 0);
    workers.emplace_back([&, begin, end, c] {
      try {
        fn(begin, end, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace molscert::detail

#endif
