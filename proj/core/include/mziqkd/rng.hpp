// Copyright 2026 The mzi-qkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace mziqkd {

/// Counter-based splittable generator. Output n of stream s under seed k is
/// a pure function of (k, s, n), built from the SplitMix64 finalizer
/// (Steele, Lea & Flood; Vigna's fixed-increment variant), so identical
/// (seed, stream_index) pairs reproduce identical sequences on every
/// platform and streams may be consumed concurrently without coordination.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index)
      : base_(derive_base(seed, stream_index)) {}

  std::uint64_t next_u64() { return mix(base_ + (++counter_) * kGamma); }

  /// Uniform in [0, 1), 53 random mantissa bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bit() { return (next_u64() >> 63) != 0; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Two finalizer rounds decorrelate neighbouring (seed, stream) pairs.
  static std::uint64_t derive_base(std::uint64_t seed, std::uint64_t stream) {
    return mix(mix(seed + kGamma) ^ mix(stream * kGamma + 0xBF58476D1CE4E5B9ull));
  }

  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace mziqkd
