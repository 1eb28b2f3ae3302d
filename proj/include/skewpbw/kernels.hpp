#pragma once

// Exhaustive-search primitives. Every checker in the library reduces to
// "find the smallest index in [0, count) whose predicate is true"; the serial
// loop is the reference, the OpenMP loop must return the same index.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewpbw {

struct ScanOptions {
  bool parallel = true;
  std::uint64_t seed = 0;
  /// Index spaces above this size are sampled instead of enumerated.
  std::uint64_t exhaustive_limit = 256ull * 256ull * 256ull;
  std::uint64_t samples = 200000;
};

namespace kernels {

struct NoScratch {};

template <class MakeScratch, class Pred>
std::optional<std::uint64_t> find_first_serial(std::uint64_t count, MakeScratch&& make_scratch,
                                               Pred&& pred) {
  auto scratch = make_scratch();
  for (std::uint64_t k = 0; k < count; ++k) {
    if (pred(k, scratch)) return k;
  }
  return std::nullopt;
}

/// Blocks are scanned in order so a witness near the front stops the search
/// early; inside a block the per-thread minima are reduced, which keeps the
/// result equal to the serial one.
template <class MakeScratch, class Pred>
std::optional<std::uint64_t> find_first_parallel(std::uint64_t count, MakeScratch&& make_scratch,
                                                 Pred&& pred, std::uint64_t block = 1u << 14) {
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::exception_ptr error;
  for (std::uint64_t base = 0; base < count; base += block) {
    const std::int64_t lo = static_cast<std::int64_t>(base);
    const std::int64_t hi = static_cast<std::int64_t>(std::min(count, base + block));
    std::uint64_t best = none;
#pragma omp parallel reduction(min : best)
    {
      auto scratch = make_scratch();
#pragma omp for schedule(static)
      for (std::int64_t k = lo; k < hi; ++k) {
        const auto uk = static_cast<std::uint64_t>(k);
        if (uk > best) continue;
        try {
          if (pred(uk, scratch)) best = std::min(best, uk);
        } catch (...) {
#pragma omp critical(skewpbw_find_first_error)
          if (!error) error = std::current_exception();
          best = std::min(best, uk);
        }
      }
    }
    if (error) std::rethrow_exception(error);
    if (best != none) return best;
  }
  return std::nullopt;
}

template <class MakeScratch, class Pred>
std::optional<std::uint64_t> find_first(bool parallel, std::uint64_t count, MakeScratch&& make_scratch,
                                        Pred&& pred) {
  if (parallel) return find_first_parallel(count, make_scratch, pred);
  return find_first_serial(count, make_scratch, pred);
}

template <class Pred>
std::optional<std::uint64_t> find_first(bool parallel, std::uint64_t count, Pred&& pred) {
  auto none = [] { return NoScratch{}; };
  auto wrapped = [&pred](std::uint64_t k, NoScratch&) { return pred(k); };
  return find_first(parallel, count, none, wrapped);
}

/// Fixed-seed sample of `k` points from [0, space). Only mt19937_64 output
/// is used (no distribution object) so the stream is the same on every
/// standard library.
inline std::vector<std::uint64_t> sample_indices(std::uint64_t space, std::uint64_t k, std::uint64_t seed) {
  std::vector<std::uint64_t> out;
  if (space == 0) return out;
  out.reserve(k);
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < k; ++i) out.push_back(rng() % space);
  return out;
}

struct ScanResult {
  std::optional<std::uint64_t> index;
  /// Points examined in scan order up to and including the hit.
  std::uint64_t work_count = 0;
  bool sampled = false;
};

/// Exhaustive when `space` fits under the limit, otherwise a fixed-seed
/// sample whose first hit (in sample order) is reported.
template <class Pred>
ScanResult scan(std::uint64_t space, const ScanOptions& opts, Pred&& pred) {
  if (space <= opts.exhaustive_limit) {
    const auto hit = find_first(opts.parallel, space, pred);
    return {hit, hit ? *hit + 1 : space, false};
  }
  const auto points = sample_indices(space, opts.samples, opts.seed);
  const auto hit = find_first(opts.parallel, points.size(), [&](std::uint64_t i) { return pred(points[i]); });
  if (!hit) return {std::nullopt, points.size(), true};
  return {points[*hit], *hit + 1, true};
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace kernels
}  // namespace skewpbw
