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

#ifndef FAMCG_INSTANCE_H_
#define FAMCG_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace famcg {

using Point = std::pair<double, double>;

struct Positions {
  std::vector<Point> facilities;
  std::vector<Point> customers;

  bool operator==(const Positions&) const = default;
};

// Single source capacitated facility location data. Costs are doubles
// (distances are irrational); demands and capacities are integers.
class Instance {
 public:
  Instance() = default;

  // Validates lengths, demand/capacity >= 1, and finite nonnegative costs.
  // Throws std::invalid_argument on violation.
  Instance(std::vector<double> open_cost, std::vector<int> capacity,
           std::vector<int> demand, std::vector<std::vector<double>> assign_cost,
           std::optional<Positions> positions = std::nullopt,
           std::optional<uint64_t> seed = std::nullopt);

  int num_facilities() const { return static_cast<int>(open_cost_.size()); }
  int num_customers() const { return static_cast<int>(demand_.size()); }

  double open_cost(int f) const { return open_cost_[f]; }
  int capacity(int f) const { return capacity_[f]; }
  int demand(int u) const { return demand_[u]; }
  double assign_cost(int f, int u) const { return assign_cost_[f][u]; }

  const std::vector<double>& open_costs() const { return open_cost_; }
  const std::vector<int>& capacities() const { return capacity_; }
  const std::vector<int>& demands() const { return demand_; }
  const std::vector<std::vector<double>>& assign_costs() const {
    return assign_cost_;
  }
  const std::optional<Positions>& positions() const { return positions_; }
  const std::optional<uint64_t>& seed() const { return seed_; }

  double max_open_cost() const;
  double max_assign_cost() const;

  bool operator==(const Instance&) const = default;

 private:
  std::vector<double> open_cost_;
  std::vector<int> capacity_;
  std::vector<int> demand_;
  std::vector<std::vector<double>> assign_cost_;
  std::optional<Positions> positions_;
  std::optional<uint64_t> seed_;
};

struct GeneratorParams {
  int num_facilities = 50;
  int num_customers = 250;
  int capacity = 150;
  double open_cost = 5.0;
  std::vector<int> demand_choices = {1, 2, 3, 4, 5};
};

// Euclidean distance.
double Distance(const Point& a, const Point& b);

// Deterministic in (seed, params). Draw order from a single Xoshiro256
// stream: demand for u = 0..n-1, then facility positions f = 0..m-1, then
// customer positions u = 0..n-1, each position drawn x first then y.
// Positions are uniform in the unit square and assignment costs are their
// Euclidean distances.
Instance GenerateInstance(uint64_t seed, const GeneratorParams& params);

// c_f + sum_{u in customers} c_fu. Capacity is not checked. Throws
// std::out_of_range on a bad index.
double ColumnCost(const Instance& inst, int facility,
                  std::span<const int> customers);

// JSON instance file. Floats are written with 17 significant digits so the
// round trip is exact.
void WriteInstance(const Instance& inst, const std::string& path);
std::string InstanceToJson(const Instance& inst);
// Throws std::runtime_error on malformed input or inconsistent lengths.
Instance ReadInstance(const std::string& path);
Instance InstanceFromJson(const std::string& text);

}  // namespace famcg

#endif  // FAMCG_INSTANCE_H_
