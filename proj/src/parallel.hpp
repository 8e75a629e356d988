/*
 *   Copyright 2026 The svcc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <atomic>
#include <cstddef>

#include "svcc/graph.hpp"

namespace svcc::detail {

/// Lowers slot to value if value is smaller. Returns true if this call
/// lowered it. Safe under concurrent callers; the final value is the minimum
/// of all offered values regardless of interleaving.
inline bool atomic_min(VertexId& slot, VertexId value) {
  std::atomic_ref<VertexId> ref(slot);
  VertexId current = ref.load(std::memory_order_relaxed);
  while (value < current) {
    if (ref.compare_exchange_weak(current, value, std::memory_order_relaxed)) return true;
  }
  return false;
}

/// Below this many work items a kernel runs on the calling thread only.
inline constexpr std::size_t kParallelGrain = 2048;

inline int workers_for(std::size_t work, int threads) {
  return (threads > 1 && work >= kParallelGrain) ? threads : 1;
}

}  // namespace svcc::detail
