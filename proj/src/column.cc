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

#include "famcg/column.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace famcg {

Column MakeColumn(const Instance& inst, int facility, std::vector<int> customers) {
  std::sort(customers.begin(), customers.end());
  Column col;
  col.facility = facility;
  col.cost = ColumnCost(inst, facility, customers);
  col.customers = std::move(customers);
  return col;
}

int ColumnDemand(const Instance& inst, const Column& col) {
  int total = 0;
  for (int u : col.customers) total += inst.demand(u);
  return total;
}

void ValidateColumn(const Instance& inst, const Column& col) {
  if (col.facility < 0 || col.facility >= inst.num_facilities()) {
    throw std::invalid_argument("column facility out of range");
  }
  for (size_t i = 0; i < col.customers.size(); ++i) {
    const int u = col.customers[i];
    if (u < 0 || u >= inst.num_customers()) {
      throw std::invalid_argument("column customer out of range");
    }
    if (i > 0 && col.customers[i - 1] >= u) {
      throw std::invalid_argument("column customers must be strictly increasing");
    }
  }
  if (ColumnDemand(inst, col) > inst.capacity(col.facility)) {
    throw std::invalid_argument("column demand exceeds facility capacity: " +
                                DescribeColumn(col));
  }
  const double expected = ColumnCost(inst, col.facility, col.customers);
  if (std::abs(expected - col.cost) > 1e-9 * (1.0 + std::abs(expected))) {
    throw std::invalid_argument("column cost does not match instance data");
  }
}

size_t ColumnKeyHash::operator()(const ColumnKey& key) const {
  // FNV-1a over the facility and customer indices.
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (16 * i)) & 0xffff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<uint64_t>(key.facility));
  for (int u : key.customers) mix(static_cast<uint64_t>(u));
  return static_cast<size_t>(h);
}

ColumnPool::ColumnPool(const Instance& inst)
    : inst_(&inst), per_facility_(inst.num_facilities()) {}

ColumnPool::InsertResult ColumnPool::Insert(Column col) {
  ValidateColumn(*inst_, col);
  ColumnKey key = KeyOf(col);
  if (auto it = key_index_.find(key); it != key_index_.end()) {
    return {it->second, false};
  }
  const int index = size();
  per_facility_[col.facility].push_back(index);
  key_index_.emplace(std::move(key), index);
  columns_.push_back(std::move(col));
  return {index, true};
}

int ColumnPool::Find(const ColumnKey& key) const {
  auto it = key_index_.find(key);
  return it == key_index_.end() ? -1 : it->second;
}

std::string DescribeColumn(const Column& col) {
  std::string out = "f" + std::to_string(col.facility) + "{";
  for (size_t i = 0; i < col.customers.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(col.customers[i]);
  }
  return out + "}";
}

}  // namespace famcg
