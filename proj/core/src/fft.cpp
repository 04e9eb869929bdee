// Copyright 2026 The metaframe Authors
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

#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace metaframe::detail {

namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s *p) const { fftw_destroy_plan(p); }
};
using PlanHandle = std::unique_ptr<fftw_plan_s, PlanDeleter>;

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays (fftw_execute_dft) is.
class PlanCache {
 public:
  fftw_plan get(int n, FftDirection direction) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, direction);
    auto it = plans_.find(key);
    if (it != plans_.end()) {
      return it->second.get();
    }
    std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
    auto *buf = reinterpret_cast<fftw_complex *>(scratch.data());
    const int sign = direction == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    PlanHandle plan(fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED));
    fftw_plan raw = plan.get();
    plans_.emplace(key, std::move(plan));
    return raw;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, FftDirection>, PlanHandle> plans_;
};

PlanCache &plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void dft_inplace(std::span<std::complex<double>> data, FftDirection direction) {
  if (data.empty()) {
    return;
  }
  fftw_plan plan = plan_cache().get(static_cast<int>(data.size()), direction);
  auto *buf = reinterpret_cast<fftw_complex *>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace metaframe::detail
