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

#include <cmath>
#include <stdexcept>

#include "famcg/random.h"
#include "gtest/gtest.h"

namespace famcg {
namespace {

constexpr double kEps = 1e-5;

TEST(LineSearchEtaTest, QuadraticPeak) {
  auto phi = [](double x) { return -(x - 0.5) * (x - 0.5); };
  EXPECT_NEAR(LineSearchEta(phi, 0.0, 1.0, kEps), 0.5, kEps);
}

TEST(LineSearchEtaTest, MonotoneIncreasingReturnsUpperEnd) {
  auto phi = [](double x) { return 3.0 * x; };
  EXPECT_NEAR(LineSearchEta(phi, 0.2, 1.0, kEps), 1.0, kEps);
}

TEST(LineSearchEtaTest, MonotoneDecreasingReturnsLowerEnd) {
  auto phi = [](double x) { return -x; };
  EXPECT_NEAR(LineSearchEta(phi, 0.2, 1.0, kEps), 0.2, kEps);
}

TEST(LineSearchEtaTest, ConstantFunction) {
  auto phi = [](double) { return 4.0; };
  const double eta = LineSearchEta(phi, 0.0, 1.0, kEps);
  EXPECT_EQ(phi(eta), phi(0.0));
  EXPECT_GE(eta, 0.0);
  EXPECT_LE(eta, 1.0);
}

TEST(LineSearchEtaTest, RandomConcaveFunctions) {
  Xoshiro256 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const double m = 1.5 + 98.5 * rng.UniformDouble();
    const double lo = 1.0 / m;
    const double peak = lo + (1.0 - lo) * (0.01 + 0.98 * rng.UniformDouble());
    const double a = 0.5 + 10.0 * rng.UniformDouble();
    const double kind = rng.UniformDouble();
    auto phi = [&](double x) {
      if (kind < 0.5) return -a * (x - peak) * (x - peak);
      return -a * std::abs(x - peak);  // kinked, like a piecewise-linear bound
    };
    EXPECT_NEAR(LineSearchEta(phi, lo, 1.0, kEps), peak, 2 * kEps) << "trial " << trial;
  }
}

TEST(LineSearchEtaTest, DegenerateInterval) {
  auto phi = [](double x) { return x; };
  EXPECT_EQ(LineSearchEta(phi, 0.7, 0.7, kEps), 0.7);
  EXPECT_THROW(LineSearchEta(phi, 0.0, 1.0, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace famcg
