// Copyright 2026 The mlbalance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mlbalance/random.h"

#include <limits>

#include "mlbalance/error.h"

namespace mlbalance {

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw InvalidParameterError("uniform_index requires n > 0");
  const std::uint64_t range = static_cast<std::uint64_t>(n);
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t draw = engine_();
  while (draw > limit) draw = engine_();
  return static_cast<std::size_t>(draw % range);
}

double Rng::uniform_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace mlbalance
