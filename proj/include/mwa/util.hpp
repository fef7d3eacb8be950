#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace mwa {

// Deterministic splitmix64 generator. Used instead of <random> engines so that
// shuffles and uniform draws are bit-stable across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::uint64_t state_;
};

// Splits [0, n) into contiguous chunks and runs fn(begin, end, chunk) on each,
// using at most `threads` workers. Chunk boundaries depend only on (n, threads),
// so per-chunk results can be merged deterministically by chunk index.
template <typename Fn>
void parallel_for_chunks(std::size_t n, int threads, Fn&& fn) {
  if (n == 0) return;
  std::size_t want = threads < 1 ? 1 : static_cast<std::size_t>(threads);
  std::size_t chunks = want > n ? n : want;
  if (chunks <= 1) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  std::size_t per = n / chunks, extra = n % chunks, begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t len = per + (c < extra ? 1 : 0);
    std::size_t end = begin + len;
    pool.emplace_back([&fn, begin, end, c] { fn(begin, end, c); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace mwa
