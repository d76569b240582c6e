// Copyright 2026 The opent Authors
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

#include <cstddef>
#include <functional>

namespace opent {

/// Runs body(i) for i in [0, n) on up to `jobs` threads (0 means the hardware
/// concurrency). Indices are handed out dynamically, so bodies must write
/// only to slots they own. The first exception thrown by any body is
/// rethrown after all workers stop.
void parallel_for(std::size_t n, std::size_t jobs,
                  const std::function<void(std::size_t)>& body);

/// Process-wide default used when a caller passes jobs = 0 explicitly
/// through the library API. The CLI sets it from --jobs.
void set_default_jobs(std::size_t jobs);
std::size_t default_jobs();

}  // namespace opent
