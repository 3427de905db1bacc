// Copyright 2026 The famcg Authors
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

#include "famcg/line_search.h"

#include <algorithm>
#include <stdexcept>

namespace famcg {

double LineSearchEta(const std::function<double(double)>& phi, double lo, double hi,
                     double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(hi > lo)) return lo;
  double eta_lo = lo;
  double eta_hi = hi;
  while (eta_hi - eta_lo > epsilon) {
    const double mid = 0.5 * eta_lo + 0.5 * eta_hi;
    const double upper = 0.25 * eta_lo + 0.75 * eta_hi;
    const double lower = 0.75 * eta_lo + 0.25 * eta_hi;
    const double f_mid = phi(mid);
    const double f_upper = phi(upper);
    const double f_lower = phi(lower);
    const double best = std::max({f_mid, f_upper, f_lower});
    if (f_mid == best) {
      eta_lo = lower;
      eta_hi = upper;
    } else if (f_lower == best) {
      eta_hi = mid;
    } else {
      eta_lo = mid;
    }
  }
  return phi(eta_hi) > phi(eta_lo) ? eta_hi : eta_lo;
}

}  // namespace famcg
