// Copyright 2026 The partex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "partex/family.hpp"

#include <algorithm>

#include "partex/error.hpp"

namespace partex {

Family::Family(PartSpec spec) : spec_(std::move(spec)) {}

bool Family::is_subset_of(const Family& other) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return other.contains(e); });
}

bool Family::operator==(const Family& other) const {
  return spec_ == other.spec_ && edges_ == other.edges_;
}

Family make_family(const PartSpec& spec, std::vector<Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) validate_edge(spec, edges[i], static_cast<long>(i));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Family f(spec);
  f.index_.reserve(edges.size());
  f.index_.insert(edges.begin(), edges.end());
  f.edges_ = std::move(edges);
  return f;
}

Family complete_family(const PartSpec& spec) {
  std::vector<Edge> edges;
  edges.reserve(spec.vector_count());
  for (std::uint64_t i = 0; i < spec.vector_count(); ++i) edges.push_back(edge_unrank(spec, i));
  return make_family(spec, std::move(edges));
}

}  // namespace partex
