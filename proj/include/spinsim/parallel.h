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

#ifndef SPINSIM_PARALLEL_H_
#define SPINSIM_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace spinsim {

/// Worker count used by the amplitude kernels. Initialized from the
/// SPINSIM_THREADS environment variable (0 or unset = hardware concurrency).
int num_workers();

/// Overrides the worker count; 0 restores the automatic choice.
void set_num_workers(int n);

/// Splits [0, n) into contiguous chunks and calls `body(begin, end)` for
/// each, possibly on several threads. Chunks are disjoint, so kernels that
/// only write inside their chunk give bitwise identical results for any
/// worker count. Small ranges run inline.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace spinsim

#endif  // SPINSIM_PARALLEL_H_
