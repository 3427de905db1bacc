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

#include "famcg/instance.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "famcg/random.h"
#include "json.hpp"

namespace famcg {

Instance::Instance(std::vector<double> open_cost, std::vector<int> capacity,
                   std::vector<int> demand,
                   std::vector<std::vector<double>> assign_cost,
                   std::optional<Positions> positions,
                   std::optional<uint64_t> seed)
    : open_cost_(std::move(open_cost)),
      capacity_(std::move(capacity)),
      demand_(std::move(demand)),
      assign_cost_(std::move(assign_cost)),
      positions_(std::move(positions)),
      seed_(seed) {
  const size_t nf = open_cost_.size();
  const size_t nc = demand_.size();
  if (nf == 0 || nc == 0) {
    throw std::invalid_argument("instance needs at least one facility and customer");
  }
  if (capacity_.size() != nf) {
    throw std::invalid_argument("capacity length differs from open_cost length");
  }
  if (assign_cost_.size() != nf) {
    throw std::invalid_argument("assign_cost needs one row per facility");
  }
  for (const auto& row : assign_cost_) {
    if (row.size() != nc) {
      throw std::invalid_argument("assign_cost row length differs from n_customers");
    }
    for (double c : row) {
      if (!std::isfinite(c) || c < 0.0) {
        throw std::invalid_argument("assign_cost must be finite and >= 0");
      }
    }
  }
  for (double c : open_cost_) {
    if (!std::isfinite(c) || c < 0.0) {
      throw std::invalid_argument("open_cost must be finite and >= 0");
    }
  }
  for (int k : capacity_) {
    if (k < 1) throw std::invalid_argument("capacities must be >= 1");
  }
  for (int d : demand_) {
    if (d < 1) throw std::invalid_argument("demands must be >= 1");
  }
  if (positions_ && (positions_->facilities.size() != nf ||
                     positions_->customers.size() != nc)) {
    throw std::invalid_argument("positions lengths are inconsistent");
  }
}

double Instance::max_open_cost() const {
  return *std::max_element(open_cost_.begin(), open_cost_.end());
}

double Instance::max_assign_cost() const {
  double best = 0.0;
  for (const auto& row : assign_cost_) {
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

Instance GenerateInstance(uint64_t seed, const GeneratorParams& params) {
  if (params.num_facilities < 1 || params.num_customers < 1) {
    throw std::invalid_argument("facility and customer counts must be >= 1");
  }
  if (params.demand_choices.empty()) {
    throw std::invalid_argument("demand_choices must be nonempty");
  }
  if (params.capacity < 1) throw std::invalid_argument("capacity must be >= 1");
  Xoshiro256 rng(seed);
  const int nf = params.num_facilities;
  const int nc = params.num_customers;

  std::vector<int> demand(nc);
  for (int u = 0; u < nc; ++u) {
    demand[u] = params.demand_choices[rng.UniformBelow(params.demand_choices.size())];
  }
  Positions pos;
  pos.facilities.resize(nf);
  pos.customers.resize(nc);
  for (int f = 0; f < nf; ++f) {
    const double x = rng.UniformDouble();
    const double y = rng.UniformDouble();
    pos.facilities[f] = {x, y};
  }
  for (int u = 0; u < nc; ++u) {
    const double x = rng.UniformDouble();
    const double y = rng.UniformDouble();
    pos.customers[u] = {x, y};
  }
  std::vector<std::vector<double>> assign(nf, std::vector<double>(nc));
  for (int f = 0; f < nf; ++f) {
    for (int u = 0; u < nc; ++u) {
      assign[f][u] = Distance(pos.facilities[f], pos.customers[u]);
    }
  }
  return Instance(std::vector<double>(nf, params.open_cost),
                  std::vector<int>(nf, params.capacity), std::move(demand),
                  std::move(assign), std::move(pos), seed);
}

double Distance(const Point& a, const Point& b) {
  return std::hypot(a.first - b.first, a.second - b.second);
}

double ColumnCost(const Instance& inst, int facility,
                  std::span<const int> customers) {
  if (facility < 0 || facility >= inst.num_facilities()) {
    throw std::out_of_range("facility index out of range");
  }
  double cost = inst.open_cost(facility);
  for (int u : customers) {
    if (u < 0 || u >= inst.num_customers()) {
      throw std::out_of_range("customer index out of range");
    }
    cost += inst.assign_cost(facility, u);
  }
  return cost;
}

namespace {

void AppendDouble(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

template <typename T, typename Fn>
void AppendArray(std::string& out, const std::vector<T>& values, Fn&& emit) {
  out += '[';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    emit(out, values[i]);
  }
  out += ']';
}

void AppendPoints(std::string& out, const std::vector<Point>& points) {
  AppendArray(out, points, [](std::string& o, const Point& p) {
    o += '[';
    AppendDouble(o, p.first);
    o += ", ";
    AppendDouble(o, p.second);
    o += ']';
  });
}

}  // namespace

std::string InstanceToJson(const Instance& inst) {
  std::string out = "{\n";
  out += "  \"n_facilities\": " + std::to_string(inst.num_facilities()) + ",\n";
  out += "  \"n_customers\": " + std::to_string(inst.num_customers()) + ",\n";
  out += "  \"open_cost\": ";
  AppendArray(out, inst.open_costs(), AppendDouble);
  out += ",\n  \"capacity\": ";
  AppendArray(out, inst.capacities(),
              [](std::string& o, int v) { o += std::to_string(v); });
  out += ",\n  \"demand\": ";
  AppendArray(out, inst.demands(),
              [](std::string& o, int v) { o += std::to_string(v); });
  out += ",\n  \"assign_cost\": [";
  for (int f = 0; f < inst.num_facilities(); ++f) {
    out += f ? ",\n    " : "\n    ";
    AppendArray(out, inst.assign_costs()[f], AppendDouble);
  }
  out += "\n  ]";
  if (inst.positions()) {
    out += ",\n  \"positions\": {\n    \"facilities\": ";
    AppendPoints(out, inst.positions()->facilities);
    out += ",\n    \"customers\": ";
    AppendPoints(out, inst.positions()->customers);
    out += "\n  }";
  }
  if (inst.seed()) {
    out += ",\n  \"seed\": " + std::to_string(*inst.seed());
  }
  out += "\n}\n";
  return out;
}

void WriteInstance(const Instance& inst, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << InstanceToJson(inst);
  if (!file) throw std::runtime_error("failed writing " + path);
}

Instance InstanceFromJson(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("malformed instance JSON: ") + e.what());
  }
  try {
    const int nf = j.at("n_facilities").get<int>();
    const int nc = j.at("n_customers").get<int>();
    auto open_cost = j.at("open_cost").get<std::vector<double>>();
    auto capacity = j.at("capacity").get<std::vector<int>>();
    auto demand = j.at("demand").get<std::vector<int>>();
    auto assign = j.at("assign_cost").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(open_cost.size()) != nf ||
        static_cast<int>(capacity.size()) != nf ||
        static_cast<int>(assign.size()) != nf) {
      throw std::runtime_error("facility arrays do not match n_facilities");
    }
    if (static_cast<int>(demand.size()) != nc) {
      throw std::runtime_error("demand length does not match n_customers");
    }
    std::optional<Positions> positions;
    if (j.contains("positions")) {
      Positions p;
      for (const auto& xy : j["positions"].at("facilities")) {
        p.facilities.emplace_back(xy.at(0).get<double>(), xy.at(1).get<double>());
      }
      for (const auto& xy : j["positions"].at("customers")) {
        p.customers.emplace_back(xy.at(0).get<double>(), xy.at(1).get<double>());
      }
      positions = std::move(p);
    }
    std::optional<uint64_t> seed;
    if (j.contains("seed")) seed = j["seed"].get<uint64_t>();
    return Instance(std::move(open_cost), std::move(capacity), std::move(demand),
                    std::move(assign), std::move(positions), seed);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("invalid instance file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid instance file: ") + e.what());
  }
}

Instance ReadInstance(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return InstanceFromJson(buffer.str());
}

}  // namespace famcg
