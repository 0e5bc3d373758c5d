// Copyright 2026 The numview Authors
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

#ifndef NUMVIEW_RNG_H_
#define NUMVIEW_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/random/uniform_int_distribution.hpp>

namespace numview {

// Seeded generator passed explicitly through every sampling routine. The
// engine and the integer distribution both have fixed algorithms, so a given
// seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform over the closed range [lo, hi].
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi) {
    boost::random::uniform_int_distribution<std::int64_t> dist(lo, hi);
    return dist(engine_);
  }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<size_t>(
          UniformInt(0, static_cast<std::int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Child seed for a labelled sub-stream, e.g. one per seed instance or per
// number-type stratum. Stable across runs and platforms.
std::uint64_t DeriveSeed(std::uint64_t parent, std::string_view label);

}  // namespace numview

#endif  // NUMVIEW_RNG_H_
