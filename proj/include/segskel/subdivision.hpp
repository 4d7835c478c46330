#pragma once

#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <unordered_map>

#include "segskel/geom.hpp"

namespace segskel {

struct GeneratorPair {
  double t1 = 0.0;
  double t2 = 0.0;
};

/// One cell of the adaptive subdivision of [0,1]^2. status=free records a
/// verified witness sample inside; blocked means the whole cell was proven
/// or assumed (at terminal depth) to be covered by blockers.
struct FreeRegionCell {
  double t1_lo = 0.0, t1_hi = 1.0;
  double t2_lo = 0.0, t2_hi = 1.0;
  enum class Status { free, blocked, mixed } status = Status::mixed;

  double side() const { return t1_hi - t1_lo; }
};

namespace detail {

struct SampleKey {
  std::uint64_t a, b;
  bool operator==(const SampleKey& o) const { return a == o.a && b == o.b; }
};

struct SampleKeyHash {
  std::size_t operator()(const SampleKey& k) const {
    std::uint64_t h = k.a * 0x9e3779b97f4a7c15ull;
    h ^= k.b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Deterministic depth-first search for a sample of [0,1]^2 where free_fn
/// holds. Per cell the center is tested first, then the corners in
/// (lo,lo), (lo,hi), (hi,lo), (hi,hi) order; a cell for which prune_fn proves
/// full coverage is dropped; otherwise it splits into quadrants in the same
/// order. Cells of side <= epsilon are not split and test only their corners,
/// so every sample lies on the lattice of pitch epsilon (for dyadic epsilon)
/// and a negative answer is sound exactly at that resolution.
template <class FreeFn, class PruneFn>
std::optional<GeneratorPair> subdivision_search(double epsilon, FreeFn&& free_fn,
                                                PruneFn&& prune_fn) {
  std::unordered_map<SampleKey, bool, SampleKeyHash> cache;

  auto sample_free = [&](double t1, double t2) {
    SampleKey key{0, 0};
    static_assert(sizeof(double) == sizeof(std::uint64_t));
    std::memcpy(&key.a, &t1, sizeof(double));
    std::memcpy(&key.b, &t2, sizeof(double));
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const bool f = free_fn(t1, t2);
    cache.emplace(key, f);
    return f;
  };

  std::optional<GeneratorPair> found;

  const std::function<bool(const FreeRegionCell&)> visit = [&](const FreeRegionCell& cell) {
    const bool terminal = cell.side() <= epsilon * (1.0 + 1e-12);
    if (!terminal) {
      const double c1 = 0.5 * (cell.t1_lo + cell.t1_hi);
      const double c2 = 0.5 * (cell.t2_lo + cell.t2_hi);
      if (sample_free(c1, c2)) {
        found = GeneratorPair{c1, c2};
        return true;
      }
    }
    const double t1s[2] = {cell.t1_lo, cell.t1_hi};
    const double t2s[2] = {cell.t2_lo, cell.t2_hi};
    for (double t1 : t1s)
      for (double t2 : t2s)
        if (sample_free(t1, t2)) {
          found = GeneratorPair{t1, t2};
          return true;
        }
    if (terminal) return false;
    if (prune_fn(cell)) return false;

    const double m1 = 0.5 * (cell.t1_lo + cell.t1_hi);
    const double m2 = 0.5 * (cell.t2_lo + cell.t2_hi);
    const FreeRegionCell quads[4] = {
        {cell.t1_lo, m1, cell.t2_lo, m2, FreeRegionCell::Status::mixed},
        {cell.t1_lo, m1, m2, cell.t2_hi, FreeRegionCell::Status::mixed},
        {m1, cell.t1_hi, cell.t2_lo, m2, FreeRegionCell::Status::mixed},
        {m1, cell.t1_hi, m2, cell.t2_hi, FreeRegionCell::Status::mixed},
    };
    for (const auto& q : quads)
      if (visit(q)) return true;
    return false;
  };

  visit(FreeRegionCell{});
  return found;
}

}  // namespace detail
}  // namespace segskel
