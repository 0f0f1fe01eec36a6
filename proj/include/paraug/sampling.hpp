// Copyright 2026 The Paraug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Portable deterministic randomness. Every augmenter draws from a splitmix64
// stream seeded per (item, stream label) via FNV-1a-64, so identical
// (input, spec, master seed) produces identical output regardless of
// processing order, thread count, or implementation language. The exact byte
// layout hashed by derive_item_seed and the draw primitives below are part
// of the output format: change them and previously pinned seeds break.

#ifndef PARAUG_SAMPLING_HPP_
#define PARAUG_SAMPLING_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paraug/errors.hpp"

namespace paraug {

struct SeedSpec {
  std::uint64_t master_seed = 0;
};

// splitmix64 (Steele, Lea, Vigna); public-domain reference constants. next()
// reproduces the published sequence for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a 64-bit over a byte range; pass a previous result as `hash` to
/// chain ranges. The empty range hashes to the offset basis
/// 0xcbf29ce484222325.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t hash = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    hash ^= p[i];
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

/// Per-item seed: FNV-1a-64 over master seed (8 bytes little-endian), then
/// the stream label's UTF-8 bytes, then the item index (8 bytes
/// little-endian). Keeps items independent: dropping one pair never changes
/// how earlier pairs are augmented.
inline std::uint64_t derive_item_seed(std::uint64_t master_seed,
                                      std::string_view stream_label,
                                      std::uint64_t item_index) {
  auto le_bytes = [](std::uint64_t v, unsigned char out[8]) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
  };
  unsigned char buf[8];
  le_bytes(master_seed, buf);
  std::uint64_t hash = fnv1a64(buf, 8);
  hash = fnv1a64(stream_label.data(), stream_label.size(), hash);
  le_bytes(item_index, buf);
  return fnv1a64(buf, 8, hash);
}

/// Uniform integer in [0, n) via the multiply-shift reduction
/// (next() * n) >> 64. n must be positive.
inline std::uint64_t bounded(SplitMix64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng.next()) * n) >> 64);
}

/// Uniform real in [lo, hi); lo == hi returns lo. u is the top 53 bits of
/// next() scaled by 2^-53, i.e. next()/2^64 at double precision, so draws
/// are exactly reproducible across implementations.
inline double uniform_real(SplitMix64& rng, double lo, double hi) {
  if (lo >= hi) return lo;
  const double u = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
  double r = lo + (hi - lo) * u;
  if (r >= hi) r = std::nextafter(hi, lo);  // rounding can land on hi
  return r;
}

/// k distinct indices in [0, n), uniform over k-subsets, emitted in partial
/// Fisher-Yates shuffle order. The final position of a full draw (k == n) is
/// forced and consumes no randomness.
inline std::vector<std::size_t> sample_without_replacement(SplitMix64& rng,
                                                           std::size_t n,
                                                           std::size_t k) {
  if (k > n) {
    throw KTooLargeError("cannot draw " + std::to_string(k) +
                         " distinct indices from a range of " +
                         std::to_string(n));
  }
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  for (std::size_t i = 0; i < k && n - i > 1; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(bounded(rng, n - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(k);
  return indices;
}

/// In-place Fisher-Yates; draw-for-draw identical to a full
/// sample_without_replacement over the same range.
template <typename T>
void shuffle(SplitMix64& rng, std::vector<T>& items) {
  const std::size_t n = items.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(bounded(rng, n - i));
    std::swap(items[i], items[j]);
  }
}

}  // namespace paraug

#endif  // PARAUG_SAMPLING_HPP_
