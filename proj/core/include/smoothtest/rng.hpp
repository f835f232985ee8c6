// Copyright 2026 The Smoothtest Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace smoothtest {

// Counter-based random stream built on Philox4x32-10.
//
// The output is a pure function of (seed, stream_id, position), so two
// streams constructed from the same pair reproduce each other bit-for-bit
// regardless of thread scheduling. Parallel work derives child streams with
// child(index) instead of sharing one generator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  // Number of 64-bit words consumed so far.
  std::uint64_t position() const noexcept { return 2 * block_ - (buffered_ ? 1 : 0); }

  std::uint64_t next_u64() noexcept;

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  // Standard normal variate (Marsaglia polar method).
  double gaussian() noexcept;
  // Exponential(1) variate.
  double exponential() noexcept;
  // Gamma(shape, 1) variate (Marsaglia-Tsang); shape > 0.
  double gamma(double shape) noexcept;
  // Unbiased integer in [0, bound); bound > 0.
  std::uint64_t uniform_index(std::uint64_t bound) noexcept;

  // Independent stream addressed by index. Depends only on (seed, stream_id,
  // index), never on how much of this stream has been consumed.
  RngStream child(std::uint64_t index) const noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept { return next_u64(); }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> words_{};
  bool buffered_ = false;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// One Philox4x32-10 block; exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

inline double rng_uniform(RngStream& stream) noexcept { return stream.uniform(); }
inline double rng_gaussian(RngStream& stream) noexcept { return stream.gaussian(); }

}  // namespace smoothtest
