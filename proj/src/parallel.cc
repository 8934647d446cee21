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

#include "spinsim/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace spinsim {
namespace {

// Below this many elements threading costs more than it saves.
constexpr std::size_t kMinParallelSize = std::size_t{1} << 15;

int env_workers() {
  const char* env = std::getenv("SPINSIM_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return std::max(0, std::stoi(env));
  } catch (const std::exception&) {
    return 0;
  }
}

std::atomic<int>& configured() {
  static std::atomic<int> value{env_workers()};
  return value;
}

}  // namespace

int num_workers() {
  int n = configured().load();
  if (n > 0) return n;
  // hardware_concurrency() reads sysfs on every call.
  static const int hardware = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return hardware;
}

void set_num_workers(int n) { configured().store(std::max(0, n)); }

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  std::size_t workers = static_cast<std::size_t>(num_workers());
  if (workers <= 1 || n < kMinParallelSize) {
    body(0, n);
    return;
  }
  workers = std::min(workers, n / (kMinParallelSize / 4));
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> threads;
  threads.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&body, begin, end] { body(begin, end); });
  }
  body(0, std::min(n, chunk));
}

}  // namespace spinsim
