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

#ifndef FAMCG_COLUMN_H_
#define FAMCG_COLUMN_H_

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "famcg/instance.h"

namespace famcg {

// A facility together with the customers it serves. customers is strictly
// increasing; cost is c_f + sum of c_fu over customers.
struct Column {
  int facility = 0;
  std::vector<int> customers;
  double cost = 0.0;

  bool operator==(const Column&) const = default;
};

// Sorts and costs the customer set. Does not check capacity.
Column MakeColumn(const Instance& inst, int facility, std::vector<int> customers);

int ColumnDemand(const Instance& inst, const Column& col);

// Throws std::invalid_argument if col breaks a Column invariant against inst
// (bad indices, unsorted or repeated customers, capacity, cost mismatch).
void ValidateColumn(const Instance& inst, const Column& col);

// (facility, customers) identity of a column.
struct ColumnKey {
  int facility = 0;
  std::vector<int> customers;

  bool operator==(const ColumnKey&) const = default;
};

struct ColumnKeyHash {
  size_t operator()(const ColumnKey& key) const;
};

inline ColumnKey KeyOf(const Column& col) { return {col.facility, col.customers}; }

// The nascent column set. Columns are never removed, so indices are stable.
class ColumnPool {
 public:
  explicit ColumnPool(const Instance& inst);

  struct InsertResult {
    int index;
    bool was_new;
  };

  // Validates col; a column whose key already exists is not added and the
  // existing index is returned with was_new = false.
  InsertResult Insert(Column col);

  // -1 when absent.
  int Find(const ColumnKey& key) const;
  bool Contains(const Column& col) const { return Find(KeyOf(col)) >= 0; }

  int size() const { return static_cast<int>(columns_.size()); }
  bool empty() const { return columns_.empty(); }
  const Column& operator[](int i) const { return columns_[i]; }
  const std::vector<Column>& columns() const { return columns_; }
  // Indices of the pool columns using facility f, in insertion order.
  const std::vector<int>& ForFacility(int f) const { return per_facility_[f]; }
  const Instance& instance() const { return *inst_; }

 private:
  const Instance* inst_;
  std::vector<Column> columns_;
  std::unordered_map<ColumnKey, int, ColumnKeyHash> key_index_;
  std::vector<std::vector<int>> per_facility_;
};

std::string DescribeColumn(const Column& col);

}  // namespace famcg

#endif  // FAMCG_COLUMN_H_
