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

#include "partex/base_sunflower.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hypergraph.hpp"
#include "partex/analysis.hpp"
#include "partex/error.hpp"

namespace partex {
namespace {

// Hypergraph over the compressed vertex ids of `sets`.
detail::Hypergraph to_hypergraph(const std::vector<VertexSet>& sets) {
  std::map<int, int> id;
  for (const auto& s : sets)
    for (int v : s) id.emplace(v, 0);
  int next = 0;
  for (auto& [v, i] : id) i = next++;
  std::vector<std::vector<int>> members;
  members.reserve(sets.size());
  for (const auto& s : sets) {
    std::vector<int> m;
    m.reserve(s.size());
    for (int v : s) m.push_back(id[v]);
    members.push_back(std::move(m));
  }
  return detail::Hypergraph(next, std::move(members));
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_some_member(const GroundedSetFamily& f, const VertexSet& c) {
  for (const auto& m : f)
    if (is_subset(m, c)) return true;
  return false;
}

// Proper nonempty subsets of `b`, by decreasing size then lexicographically.
std::vector<VertexSet> ordered_proper_subsets(const VertexSet& b) {
  std::vector<VertexSet> out;
  const int m = static_cast<int>(b.size());
  for (int k = m - 1; k >= 1; --k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet c;
      for (int i : idx) c.push_back(b[static_cast<std::size_t>(i)]);
      out.push_back(std::move(c));
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

ShrinkStep make_step(const GroundedSetFamily& f, const VertexSet& c, int nu_before, GroundedSetFamily* result) {
  ShrinkStep step;
  step.core = c;
  for (const auto& m : f)
    if (is_subset(c, m)) step.replaced.push_back(m);
  *result = shrink(f, c);
  step.nu_before = nu_before;
  step.nu_after = set_matching_number(*result);
  step.accepted = step.nu_after == nu_before;
  return step;
}

}  // namespace

GroundedSetFamily::GroundedSetFamily(std::vector<VertexSet> sets) {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InvalidArgument("members of a grounded set family must be nonempty");
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  sets_ = std::move(sets);
}

bool GroundedSetFamily::contains(const VertexSet& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

int GroundedSetFamily::rank() const {
  std::size_t out = 0;
  for (const auto& s : sets_) out = std::max(out, s.size());
  return static_cast<int>(out);
}

VertexSet GroundedSetFamily::ground() const {
  VertexSet out;
  for (const auto& s : sets_) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool GroundedSetFamily::is_antichain() const {
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (std::size_t j = 0; j < sets_.size(); ++j)
      if (i != j && is_subset(sets_[i], sets_[j])) return false;
  return true;
}

std::string GroundedSetFamily::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) out += ",";
    out += format_vertex_set(sets_[i]);
  }
  return out + "}";
}

std::string format_vertex_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

bool is_subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool are_disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i;
    else ++j;
  }
  return true;
}

GroundedSetFamily shrink(const GroundedSetFamily& f, const VertexSet& c_in) {
  VertexSet c = c_in;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  if (c.empty()) throw InvalidArgument("shrink core must be nonempty");
  bool proper = false;
  for (const auto& m : f)
    if (m.size() > c.size() && is_subset(c, m)) proper = true;
  if (!proper) throw InvalidArgument("shrink core " + format_vertex_set(c) + " is not a proper subset of any member");
  std::vector<VertexSet> out;
  for (const auto& m : f)
    if (!is_subset(c, m)) out.push_back(m);
  out.push_back(c);
  return GroundedSetFamily(std::move(out));
}

int set_matching_number(const GroundedSetFamily& f) {
  if (f.empty()) return 0;
  const auto h = to_hypergraph(f.sets());
  return h.matching_number(h.all_members());
}

int set_transversal_number(const GroundedSetFamily& f) {
  if (f.empty()) return 0;
  const auto h = to_hypergraph(f.sets());
  return h.transversal_number(h.all_members());
}

std::vector<int> BaseFamily::size_distribution() const {
  std::vector<int> out(static_cast<std::size_t>(sets.rank() + 1), 0);
  for (const auto& s : sets) ++out[s.size()];
  return out;
}

std::string BaseFamily::provenance_json_lines() const {
  std::string out;
  for (const auto& step : provenance) {
    nlohmann::ordered_json j;
    j["core"] = step.core;
    j["replaced"] = step.replaced;
    j["nu_before"] = step.nu_before;
    j["nu_after"] = step.nu_after;
    j["accepted"] = step.accepted;
    out += j.dump() + "\n";
  }
  return out;
}

GroundedSetFamily replay_provenance(const GroundedSetFamily& f, const std::vector<ShrinkStep>& log) {
  GroundedSetFamily current = f;
  for (const auto& step : log) {
    if (!step.accepted) continue;
    current = shrink(current, step.core);
  }
  return current;
}

bool shrink_preserves_matching(const GroundedSetFamily& f, const VertexSet& c) {
  return set_matching_number(shrink(f, c)) == set_matching_number(f);
}

BaseFamily compute_base(const GroundedSetFamily& f) {
  BaseFamily out;
  GroundedSetFamily current = f;
  const int nu = set_matching_number(f);

  // Drop members that contain another member.
  for (bool again = true; again;) {
    again = false;
    for (const auto& a : current) {
      bool under_other = false;
      for (const auto& b : current)
        if (b.size() > a.size() && is_subset(a, b)) under_other = true;
      if (!under_other) continue;
      GroundedSetFamily next;
      out.provenance.push_back(make_step(current, a, nu, &next));
      current = std::move(next);
      again = true;
      break;
    }
  }

  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < current.size() && !again; ++i) {
      const VertexSet member = current.sets()[i];
      for (const auto& c : ordered_proper_subsets(member)) {
        if (contains_some_member(current, c)) continue;
        GroundedSetFamily next;
        ShrinkStep step = make_step(current, c, nu, &next);
        const bool accepted = step.accepted;
        out.provenance.push_back(std::move(step));
        if (accepted) {
          current = std::move(next);
          again = true;
          break;
        }
      }
    }
  }
  out.sets = std::move(current);
  return out;
}

bool is_base_of(const GroundedSetFamily& base, const GroundedSetFamily& original) {
  if (!base.is_antichain()) return false;
  for (const auto& m : original) {
    bool covered = false;
    for (const auto& b : base)
      if (is_subset(b, m)) covered = true;
    if (!covered) return false;
  }
  const int nu = set_matching_number(base);
  if (nu != set_matching_number(original)) return false;
  for (const auto& b : base) {
    for (const auto& c : ordered_proper_subsets(b)) {
      if (set_matching_number(shrink(base, c)) <= nu) return false;
    }
  }
  return true;
}

bool is_sunflower(const Sunflower& s) {
  if (s.petals.empty()) return false;
  VertexSet core = s.petals.front();
  for (const auto& p : s.petals) core = set_intersection(core, p);
  if (core != s.core) return false;
  for (std::size_t i = 0; i < s.petals.size(); ++i)
    for (std::size_t j = i + 1; j < s.petals.size(); ++j)
      if (!are_disjoint(set_minus(s.petals[i], core), set_minus(s.petals[j], core))) return false;
  return true;
}

std::optional<Sunflower> find_sunflower(const GroundedSetFamily& f, int petal_count) {
  if (petal_count < 1) throw InvalidArgument("petal count must be >= 1");
  if (f.empty()) return std::nullopt;
  if (petal_count == 1) return Sunflower{f.sets().front(), {f.sets().front()}};
  if (static_cast<int>(f.size()) < petal_count) return std::nullopt;

  // Every sunflower with at least two petals has the intersection of any two
  // of its members as core.
  std::vector<VertexSet> cores;
  const auto& sets = f.sets();
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) cores.push_back(set_intersection(sets[i], sets[j]));
  std::sort(cores.begin(), cores.end());
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());

  for (const auto& core : cores) {
    std::vector<VertexSet> members;
    std::vector<VertexSet> petals;
    std::optional<VertexSet> core_member;
    for (const auto& m : sets) {
      if (!is_subset(core, m)) continue;
      if (m.size() == core.size()) core_member = m;
      else {
        members.push_back(m);
        petals.push_back(set_minus(m, core));
      }
    }
    const int need = petal_count - (core_member ? 1 : 0);
    if (static_cast<int>(petals.size()) < need) continue;
    const auto h = to_hypergraph(petals);
    if (!h.has_matching(h.all_members(), need)) continue;
    const auto matching = h.lexleast_maximum_matching();
    Sunflower out{core, {}};
    if (core_member) out.petals.push_back(*core_member);
    for (int k = 0; k < need; ++k) out.petals.push_back(members[matching[static_cast<std::size_t>(k)]]);
    std::sort(out.petals.begin(), out.petals.end());
    if (!is_sunflower(out)) throw InternalConsistencyError("sunflower finder produced an invalid sunflower");
    return out;
  }
  return std::nullopt;
}

ErdosRadoReport erdos_rado_check(const GroundedSetFamily& f, int petal_count) {
  ErdosRadoReport out;
  out.rank = f.rank();
  out.petal_count = petal_count;
  out.family_size = static_cast<long>(f.size());
  out.bound = erdos_rado_bound(out.rank, petal_count);
  out.bound_exceeded = out.family_size > out.bound;
  out.sunflower = find_sunflower(f, petal_count);
  if (out.bound_exceeded && !out.sunflower) {
    throw InternalConsistencyError("family exceeds the sunflower bound but no sunflower was found");
  }
  return out;
}

int tagged_vertex_id(const Vertex& v) { return v.part * 256 + v.symbol; }

Vertex tagged_vertex(int id) { return Vertex{id / 256, id % 256}; }

GroundedSetFamily to_grounded(const Family& f) {
  std::vector<VertexSet> sets;
  sets.reserve(f.size());
  for (const Edge& e : f) {
    VertexSet s;
    for (int l = 1; l <= e.r(); ++l) s.push_back(tagged_vertex_id(Vertex{l, e.coord(l)}));
    sets.push_back(std::move(s));
  }
  return GroundedSetFamily(std::move(sets));
}

bool PartiteBaseReport::lemma_holds() const {
  return nu_base == nu_family && nu_base <= s && s < tau_base && !has_large_sunflower &&
         BigInt(static_cast<long>(base.sets.size())) <= size_bound;
}

PartiteBaseReport base_of_partite_family(const Family& f, int s) {
  if (s < 1) throw InvalidArgument("s must be >= 1");
  if (!is_nontrivial_matching_family(f, s)) {
    throw PreconditionViolated("family does not satisfy nu <= " + std::to_string(s) + " < tau");
  }
  const int r = f.spec().r();
  const GroundedSetFamily g = to_grounded(f);
  PartiteBaseReport out;
  out.s = s;
  out.nu_family = set_matching_number(g);
  out.base = compute_base(g);
  out.nu_base = set_matching_number(out.base.sets);
  out.tau_base = set_transversal_number(out.base.sets);
  out.has_large_sunflower = find_sunflower(out.base.sets, r * s + 1).has_value();
  out.size_bound = erdos_rado_bound(r, r * s + 1);
  return out;
}

}  // namespace partex
