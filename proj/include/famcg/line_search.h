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

#ifndef FAMCG_LINE_SEARCH_H_
#define FAMCG_LINE_SEARCH_H_

#include <functional>

namespace famcg {

// Maximizes a concave phi on [lo, hi] by quarter sections: evaluate at the
// 1/4, 1/2 and 3/4 points of the current interval and keep
//   [zeta-, zeta+]  if the midpoint is best,
//   [lo, zeta]      if the 1/4 point is best,
//   [zeta, hi]      if the 3/4 point is best,
// checked in that order, until hi - lo <= epsilon. Returns the better
// endpoint of the final interval (lo on ties).
double LineSearchEta(const std::function<double(double)>& phi, double lo, double hi,
                     double epsilon);

}  // namespace famcg

#endif  // FAMCG_LINE_SEARCH_H_
