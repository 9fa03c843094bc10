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

#include "partex/analysis.hpp"

#include <algorithm>
#include <string>

#include "hypergraph.hpp"
#include "partex/error.hpp"
#include "partex/simd/kernels.hpp"

namespace partex {
namespace {

// Vertex ids follow (part, symbol) order: id = offset[part] + symbol - 1.
std::vector<int> vertex_offsets(const PartSpec& spec) {
  std::vector<int> offset(static_cast<std::size_t>(spec.r()) + 1, 0);
  for (int part = 1; part <= spec.r(); ++part) {
    offset[static_cast<std::size_t>(part)] = offset[static_cast<std::size_t>(part - 1)] + spec.size(part);
  }
  return offset;
}

detail::Hypergraph to_hypergraph(const Family& f) {
  const PartSpec& spec = f.spec();
  const auto offset = vertex_offsets(spec);
  std::vector<int> vertex_part(static_cast<std::size_t>(spec.vertex_count()));
  for (int part = 1; part <= spec.r(); ++part) {
    for (int x = 1; x <= spec.size(part); ++x) {
      vertex_part[static_cast<std::size_t>(offset[static_cast<std::size_t>(part - 1)] + x - 1)] = part - 1;
    }
  }
  std::vector<std::vector<int>> members;
  members.reserve(f.size());
  for (const Edge& e : f) {
    std::vector<int> m;
    for (int part = 1; part <= spec.r(); ++part) {
      m.push_back(offset[static_cast<std::size_t>(part - 1)] + e.coord(part) - 1);
    }
    members.push_back(std::move(m));
  }
  return detail::Hypergraph(spec.vertex_count(), std::move(members), std::move(vertex_part));
}

Vertex vertex_from_id(const PartSpec& spec, int id) {
  for (int part = 1; part <= spec.r(); ++part) {
    if (id < spec.size(part)) return Vertex{part, id + 1};
    id -= spec.size(part);
  }
  throw InternalConsistencyError("vertex id out of range");
}

// Coordinates of the edges in structure-of-arrays layout for the kernels.
struct Columns {
  std::vector<std::vector<std::uint8_t>> data;
  std::vector<const std::uint8_t*> ptrs;

  explicit Columns(const Family& f) : data(static_cast<std::size_t>(f.spec().r())) {
    for (auto& col : data) col.reserve(f.size());
    for (const Edge& e : f) {
      for (int part = 1; part <= f.spec().r(); ++part) {
        data[static_cast<std::size_t>(part - 1)].push_back(static_cast<std::uint8_t>(e.coord(part)));
      }
    }
    for (auto& col : data) ptrs.push_back(col.data());
  }

  std::vector<const std::uint8_t*> offset_by(std::size_t start) const {
    std::vector<const std::uint8_t*> out;
    for (const auto* p : ptrs) out.push_back(p + start);
    return out;
  }
};

}  // namespace

int intersection_size(const Edge& a, const Edge& b) {
  if (a.r() != b.r()) {
    throw InvalidArgument("edges of different arity (" + std::to_string(a.r()) + " vs " + std::to_string(b.r()) + ")");
  }
  int k = 0;
  for (int part = 1; part <= a.r(); ++part) k += a.coord(part) == b.coord(part);
  return k;
}

int min_pairwise_intersection(const Family& f) {
  const int r = f.spec().r();
  if (f.size() <= 1) return r;
  const auto& kernels = simd::active_kernels();
  const Columns cols(f);
  std::vector<std::uint8_t> counts(f.size());
  int best = r;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const std::size_t rest = f.size() - i - 1;
    const auto shifted = cols.offset_by(i + 1);
    kernels.agreement_counts(shifted.data(), r, f[i].coords().data(), rest, counts.data());
    best = std::min(best, static_cast<int>(kernels.min_u8(counts.data(), rest)));
    if (best == 0) break;
  }
  return best;
}

bool is_t_intersecting(const Family& f, int t) {
  if (t < 0 || t > f.spec().r()) {
    throw InvalidArgument("t = " + std::to_string(t) + " outside [0, " + std::to_string(f.spec().r()) + "]");
  }
  return min_pairwise_intersection(f) >= t;
}

MatchingResult matching_number(const Family& f) {
  MatchingResult result;
  if (f.empty()) return result;
  const auto hg = to_hypergraph(f);
  for (std::size_t i : hg.lexleast_maximum_matching()) result.witness.edges.push_back(f[i]);
  result.size = static_cast<int>(result.witness.edges.size());
  return result;
}

TransversalResult transversal_number(const Family& f) {
  TransversalResult result;
  if (f.empty()) return result;
  const auto hg = to_hypergraph(f);
  for (int id : hg.lexleast_minimum_transversal()) result.witness.vertices.push_back(vertex_from_id(f.spec(), id));
  result.size = static_cast<int>(result.witness.vertices.size());
  return result;
}

std::optional<CoordSet> fixed_coordinates(const Family& f) {
  if (f.empty()) return std::nullopt;
  CoordSet fixed = CoordSet::full(f.spec().r());
  const Edge& first = f[0];
  for (const Edge& e : f) {
    for (int part : fixed.parts()) {
      if (e.coord(part) != first.coord(part)) fixed.erase(part);
    }
    if (fixed.empty()) break;
  }
  return fixed;
}

bool is_nontrivial_matching_family(const Family& f, int s) {
  if (s < 1) throw InvalidArgument("s must be at least 1");
  if (f.empty()) return false;
  const auto hg = to_hypergraph(f);
  const Bitset all = hg.all_members();
  return !hg.has_matching(all, s + 1) && !hg.has_transversal(all, s);
}

bool is_nontrivial_intersecting_family(const Family& f, int t) {
  if (t < 1 || t >= f.spec().r()) {
    throw InvalidArgument("t = " + std::to_string(t) + " outside [1, r-1]");
  }
  if (f.empty()) return false;
  return fixed_coordinates(f)->size() < t && is_t_intersecting(f, t);
}

CoordSet projection(const Edge& e) {
  CoordSet p;
  for (int part = 1; part <= e.r(); ++part) {
    if (e.coord(part) == 1) p.insert(part);
  }
  return p;
}

SetFamily projection_family(const Family& f) {
  SetFamily out(f.spec().r());
  for (const Edge& e : f) out.insert(projection(e));
  return out;
}

AnalysisReport analyze(const Family& f) {
  AnalysisReport report;
  const auto nu = matching_number(f);
  const auto tau = transversal_number(f);
  report.nu = nu.size;
  report.nu_witness = nu.witness;
  report.tau = tau.size;
  report.tau_witness = tau.witness;
  report.min_pairwise_intersection = min_pairwise_intersection(f);
  report.fixed_coords = fixed_coordinates(f);
  return report;
}

bool is_matching(std::span<const Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (intersection_size(edges[i], edges[j]) != 0) return false;
    }
  }
  return true;
}

bool is_transversal(const Family& f, std::span<const Vertex> vertices) {
  return std::all_of(f.begin(), f.end(), [&](const Edge& e) {
    return std::any_of(vertices.begin(), vertices.end(),
                       [&](const Vertex& v) { return e.coord(v.part) == v.symbol; });
  });
}

}  // namespace partex
