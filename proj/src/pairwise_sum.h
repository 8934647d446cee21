// Copyright 2026 The spinsim Authors
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

#ifndef SPINSIM_SRC_PAIRWISE_SUM_H_
#define SPINSIM_SRC_PAIRWISE_SUM_H_

#include <cstddef>

namespace spinsim::detail {

// Sums term(i) for i in [begin, end) by recursive halving down to blocks of
// 32 summed left to right. The order depends only on the range, which keeps
// reductions reproducible.
template <typename T, typename F>
T pairwise_sum(std::size_t begin, std::size_t end, const F& term) {
  constexpr std::size_t kBlock = 32;
  if (end - begin <= kBlock) {
    T acc{};
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    return acc;
  }
  std::size_t mid = begin + (end - begin) / 2;
  return pairwise_sum<T>(begin, mid, term) + pairwise_sum<T>(mid, end, term);
}

}  // namespace spinsim::detail

#endif  // SPINSIM_SRC_PAIRWISE_SUM_H_
