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

#include "partex/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <mutex>
#include <thread>

#include "partex/analysis.hpp"
#include "partex/constructions.hpp"
#include "partex/error.hpp"
#include "partex/simd/kernels.hpp"

namespace partex {

std::string SearchProblem::to_string() const {
  return std::string(mode == SearchMode::kMatching ? "matching s=" : "intersecting t=") + std::to_string(param) +
         " " + spec.to_string();
}

void validate_problem(const SearchProblem& p) {
  if (p.mode == SearchMode::kMatching) {
    if (p.param < 1 || p.param >= p.spec.min_size()) {
      throw InvalidArgument("s must lie in [1, min part size - 1] (got s=" + std::to_string(p.param) +
                            ", sizes " + p.spec.to_string() + ")");
    }
  } else if (p.param < 1 || p.param > p.spec.r() - 2) {
    throw InvalidArgument("t must lie in [1, r-2] (got t=" + std::to_string(p.param) +
                          ", r=" + std::to_string(p.spec.r()) + ")");
  }
}

bool is_feasible(const Family& f, const SearchProblem& p) {
  if (p.mode == SearchMode::kIntersecting) return is_t_intersecting(f, p.param);
  return matching_number(f).size <= p.param;
}

bool is_nontrivial(const Family& f, const SearchProblem& p) {
  if (p.mode == SearchMode::kIntersecting) return is_nontrivial_intersecting_family(f, p.param);
  return is_nontrivial_matching_family(f, p.param);
}

std::uint64_t default_node_limit() {
  if (const char* env = std::getenv("PARTEX_NODE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100'000'000;
}

std::optional<FormulaValue> reference_formula(const SearchProblem& p) {
  FormulaParams fp;
  fp.r = p.spec.r();
  fp.sizes.assign(p.spec.sizes().begin(), p.spec.sizes().end());
  const int r = p.spec.r();
  if (r < 3) return std::nullopt;
  if (p.mode == SearchMode::kMatching) {
    fp.s = p.param;
    if (p.spec.is_uniform()) return formula(p.param == 1 ? "m0_s1" : "m0_s", fp);
    if (r == 3 && p.param == 1) return formula("m0_asym3", fp);
    return formula(r == 4 ? "m0_asym4" : "m0_unbalanced", fp);
  }
  fp.t = p.param;
  if (p.param == r - 2) return formula("iota0_r_minus_2", fp);
  if (p.spec.is_uniform()) return formula("iota0_symmetric", fp);
  return std::nullopt;
}

namespace {

constexpr std::size_t kMaxWords = kDefaultSearchVectorCap / 64;

using Word = std::uint64_t;

inline bool test_bit(const Word* s, std::size_t i) { return (s[i >> 6] >> (i & 63)) & 1u; }
inline void reset_bit(Word* s, std::size_t i) { s[i >> 6] &= ~(Word{1} << (i & 63)); }
inline void set_bit(Word* s, std::size_t i) { s[i >> 6] |= Word{1} << (i & 63); }

inline bool any_bits(const Word* s, std::size_t w) {
  for (std::size_t i = 0; i < w; ++i)
    if (s[i]) return true;
  return false;
}

inline std::size_t first_bit(const Word* s, std::size_t w) {
  for (std::size_t i = 0; i < w; ++i)
    if (s[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(s[i]));
  return w << 6;
}

inline int popcount_bits(const Word* s, std::size_t w) {
  int c = 0;
  for (std::size_t i = 0; i < w; ++i) c += std::popcount(s[i]);
  return c;
}

// Every candidate vector with its column data, per-(part, symbol) masks and
// the agreement-threshold adjacency rows.
struct Instance {
  PartSpec spec;
  int r;
  std::size_t n;  // vector count
  std::size_t w;  // words per bitset
  std::vector<Edge> vecs;
  std::vector<std::vector<std::uint8_t>> cols;
  std::vector<int> col_offset;
  std::vector<Word> colsets;  // (col_offset[l-1] + x - 1) * w
  std::vector<std::vector<Word>> agree_rows;  // [k] -> n * w words, agreement >= k
  std::vector<Word> disjoint_rows;            // agreement == 0

  explicit Instance(const PartSpec& s) : spec(s), r(s.r()), n(s.vector_count()), w((n + 63) / 64) {
    vecs.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) vecs.push_back(edge_unrank(spec, i));
    cols.assign(static_cast<std::size_t>(r), std::vector<std::uint8_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (int l = 0; l < r; ++l) cols[static_cast<std::size_t>(l)][i] = static_cast<std::uint8_t>(vecs[i].coord(l + 1));
    int off = 0;
    for (int l = 1; l <= r; ++l) {
      col_offset.push_back(off);
      off += spec.size(l);
    }
    colsets.assign(static_cast<std::size_t>(off) * w, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (int l = 1; l <= r; ++l) set_bit(colset_mut(l, vecs[i].coord(l)), i);
    agree_rows.resize(static_cast<std::size_t>(r + 1));
  }

  Word* colset_mut(int part, int symbol) {
    return colsets.data() + (static_cast<std::size_t>(col_offset[static_cast<std::size_t>(part - 1)] + symbol - 1)) * w;
  }
  const Word* colset(int part, int symbol) const {
    return colsets.data() + (static_cast<std::size_t>(col_offset[static_cast<std::size_t>(part - 1)] + symbol - 1)) * w;
  }

  void counts_for(std::size_t v, std::uint8_t* out) const {
    const auto& k = simd::active_kernels();
    std::vector<const std::uint8_t*> ptrs;
    for (const auto& c : cols) ptrs.push_back(c.data());
    std::uint8_t probe[kMaxParts];
    for (int l = 0; l < r; ++l) probe[l] = cols[static_cast<std::size_t>(l)][v];
    k.agreement_counts(ptrs.data(), r, probe, n, out);
  }

  // Rows of the graph joining vectors that agree in at least k coordinates.
  void build_agree_rows(int k) {
    auto& rows = agree_rows[static_cast<std::size_t>(k)];
    if (!rows.empty()) return;
    rows.assign(n * w, 0);
    std::vector<std::uint8_t> counts(n);
    const auto& kt = simd::active_kernels();
    for (std::size_t v = 0; v < n; ++v) {
      counts_for(v, counts.data());
      Word* row = rows.data() + v * w;
      kt.threshold_mask(counts.data(), n, static_cast<std::uint8_t>(k), row);
      reset_bit(row, v);
    }
  }

  void build_disjoint_rows() {
    if (!disjoint_rows.empty()) return;
    disjoint_rows.assign(n * w, 0);
    std::vector<std::uint8_t> counts(n);
    const auto& kt = simd::active_kernels();
    for (std::size_t v = 0; v < n; ++v) {
      counts_for(v, counts.data());
      Word* row = disjoint_rows.data() + v * w;
      kt.threshold_mask(counts.data(), n, 1, row);
      for (std::size_t i = 0; i < w; ++i) row[i] = ~row[i];
      if (n & 63) row[w - 1] &= (Word{1} << (n & 63)) - 1;
    }
  }

  const Word* agree_row(int k, std::size_t v) const { return agree_rows[static_cast<std::size_t>(k)].data() + v * w; }
  const Word* disjoint_row(std::size_t v) const { return disjoint_rows.data() + v * w; }
};

struct Shared {
  std::atomic<long> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::uint64_t limit = 0;
  std::mutex mu;
  std::vector<std::size_t> witness;
};

// How candidates are kept compatible with the current family.
enum class Compat {
  kPairwise,  // clique in the agreement >= k graph
  kMatching,  // nu(F) <= s, checked incrementally
};

// How non-triviality is tracked.
enum class NonTrivial {
  kFixedMask,  // fewer than t coordinates constant
  kCover,      // no s vertices meet every member
};

struct EngineConfig {
  Compat compat;
  int k = 0;  // agreement threshold for kPairwise
  NonTrivial nt;
  int param = 0;  // t for kFixedMask, s for kCover (and kMatching)
};

class Engine {
 public:
  Engine(const Instance& inst, EngineConfig cfg, Shared& shared) : inst_(inst), cfg_(cfg), shared_(shared) {}

  // Explores families containing `seed` (pairwise compatible already) and
  // drawn from `cand`.
  void run(const std::vector<std::size_t>& seed, const Word* cand) {
    family_ = seed;
    fam_bits_.assign(inst_.w, 0);
    for (std::size_t v : seed) set_bit(fam_bits_.data(), v);
    std::uint32_t mask = 0;
    bool nontrivial = false;
    if (!seed.empty()) {
      mask = full_mask();
      for (std::size_t v : seed) mask &= agree_mask(seed.front(), v);
      nontrivial = compute_nontrivial(mask);
    }
    std::vector<Word> p(cand, cand + inst_.w);
    if (cfg_.compat == Compat::kMatching && !seed.empty()) {
      // Drop candidates that would complete an (s+1)-matching with the seed.
      Word base[kMaxWords];
      for (std::size_t u = first_bit(p.data(), inst_.w); u < inst_.n; u = first_bit(p.data(), inst_.w) ) {
        const Word* du = inst_.disjoint_row(u);
        for (std::size_t i = 0; i < inst_.w; ++i) base[i] = fam_bits_[i] & du[i];
        reset_bit(p.data(), u);
        if (!has_matching(base, cfg_.param)) kept_.push_back(u);
      }
      for (std::size_t u : kept_) set_bit(p.data(), u);
      kept_.clear();
    }
    expand(0, p.data(), mask, nontrivial);
  }

 private:
  struct Level {
    std::vector<Word> p;
    std::vector<Word> scratch;
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> bound;
  };

  std::uint32_t full_mask() const { return inst_.r >= 32 ? ~0u : ((1u << inst_.r) - 1u); }

  std::uint32_t agree_mask(std::size_t a, std::size_t b) const {
    std::uint32_t m = 0;
    for (int l = 0; l < inst_.r; ++l)
      if (inst_.cols[static_cast<std::size_t>(l)][a] == inst_.cols[static_cast<std::size_t>(l)][b]) m |= 1u << l;
    return m;
  }

  bool compute_nontrivial(std::uint32_t mask) {
    if (family_.empty()) return false;
    if (cfg_.nt == NonTrivial::kFixedMask) return std::popcount(mask) < cfg_.param;
    cover_.clear();
    return !find_cover(fam_bits_.data(), cfg_.param, cover_);
  }

  Level& level(std::size_t depth) {
    while (levels_.size() <= depth) {
      Level l;
      l.p.assign(inst_.w, 0);
      l.scratch.assign(inst_.w, 0);
      l.order.reserve(inst_.n);
      l.bound.reserve(inst_.n);
      levels_.push_back(std::move(l));
    }
    return levels_[depth];
  }

  // A set of at most `budget` vertices (part, symbol) meeting every member of s.
  bool find_cover(const Word* s, int budget, std::vector<std::pair<int, int>>& chosen) const {
    const std::size_t first = first_bit(s, inst_.w);
    if (first >= inst_.n) return true;
    if (budget == 0) return false;
    Word next[kMaxWords];
    for (int l = 1; l <= inst_.r; ++l) {
      const int x = inst_.vecs[first].coord(l);
      const Word* col = inst_.colset(l, x);
      for (std::size_t i = 0; i < inst_.w; ++i) next[i] = s[i] & ~col[i];
      chosen.emplace_back(l, x);
      if (find_cover(next, budget - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  // True iff `s` contains m pairwise disjoint vectors.
  bool has_matching(const Word* s, int m) const {
    if (m <= 0) return true;
    if (popcount_bits(s, inst_.w) < m) return false;
    Word rest[kMaxWords];
    std::memcpy(rest, s, inst_.w * sizeof(Word));
    for (std::size_t x = first_bit(rest, inst_.w); x < inst_.n; x = first_bit(rest, inst_.w)) {
      reset_bit(rest, x);
      if (m == 1) return true;
      Word sub[kMaxWords];
      const Word* d = inst_.disjoint_row(x);
      for (std::size_t i = 0; i < inst_.w; ++i) sub[i] = rest[i] & d[i];
      if (has_matching(sub, m - 1)) return true;
      if (popcount_bits(rest, inst_.w) < m) return false;
    }
    return false;
  }

  // Candidates remaining compatible after adding v to the family (v is
  // already in family_/fam_bits_).
  void child_candidates(const Word* p, std::size_t v, Word* out) const {
    if (cfg_.compat == Compat::kPairwise) {
      const Word* row = inst_.agree_row(cfg_.k, v);
      for (std::size_t i = 0; i < inst_.w; ++i) out[i] = p[i] & row[i];
      return;
    }
    std::memcpy(out, p, inst_.w * sizeof(Word));
    reset_bit(out, v);
    const Word* dv = inst_.disjoint_row(v);
    Word both[kMaxWords];
    for (std::size_t i = 0; i < inst_.w; ++i) both[i] = out[i] & dv[i];
    for (std::size_t u = first_bit(both, inst_.w); u < inst_.n;) {
      const Word* du = inst_.disjoint_row(u);
      Word base[kMaxWords];
      for (std::size_t i = 0; i < inst_.w; ++i) base[i] = fam_bits_[i] & du[i] & dv[i];
      if (has_matching(base, cfg_.param - 1)) reset_bit(out, u);
      reset_bit(both, u);
      u = first_bit(both, inst_.w);
    }
  }

  // Greedy partition of p into classes (independent sets in the pairwise
  // case, pairwise disjoint vectors in the matching case); bound[i] caps
  // how many of order[0..i] can still be added.
  void partition(const Word* p, Level& lv) const {
    lv.order.clear();
    lv.bound.clear();
    Word u[kMaxWords];
    Word q[kMaxWords];
    std::memcpy(u, p, inst_.w * sizeof(Word));
    std::uint32_t total = 0;
    while (any_bits(u, inst_.w)) {
      std::memcpy(q, u, inst_.w * sizeof(Word));
      std::size_t start = lv.order.size();
      for (std::size_t v = first_bit(q, inst_.w); v < inst_.n; v = first_bit(q, inst_.w)) {
        reset_bit(q, v);
        reset_bit(u, v);
        lv.order.push_back(static_cast<std::uint32_t>(v));
        if (cfg_.compat == Compat::kPairwise) {
          const Word* row = inst_.agree_row(cfg_.k, v);
          for (std::size_t i = 0; i < inst_.w; ++i) q[i] &= ~row[i];
        } else {
          const Word* row = inst_.disjoint_row(v);
          for (std::size_t i = 0; i < inst_.w; ++i) q[i] &= row[i];
        }
      }
      const std::size_t size = lv.order.size() - start;
      if (cfg_.compat == Compat::kPairwise) total += 1;
      else total += static_cast<std::uint32_t>(std::min<std::size_t>(size, static_cast<std::size_t>(cfg_.param)));
      for (std::size_t i = start; i < lv.order.size(); ++i) lv.bound.push_back(total);
    }
  }

  void record() {
    const long size = static_cast<long>(family_.size());
    if (size <= shared_.best.load(std::memory_order_relaxed)) return;
    std::lock_guard<std::mutex> lock(shared_.mu);
    if (size <= shared_.best.load(std::memory_order_relaxed)) return;
    shared_.witness = family_;
    shared_.best.store(size, std::memory_order_relaxed);
  }

  bool tick() {
    if (shared_.aborted.load(std::memory_order_relaxed)) return false;
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.limit) {
      shared_.aborted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void push(std::size_t v) {
    family_.push_back(v);
    set_bit(fam_bits_.data(), v);
  }
  void pop() {
    reset_bit(fam_bits_.data(), family_.back());
    family_.pop_back();
  }

  void expand(std::size_t depth, const Word* p_in, std::uint32_t mask, bool nontrivial) {
    if (!tick()) return;
    if (nontrivial) record();
    Level& lv = level(depth);
    Word* p = lv.p.data();
    std::memcpy(p, p_in, inst_.w * sizeof(Word));
    if (!any_bits(p, inst_.w)) return;
    const long fsz = static_cast<long>(family_.size());
    partition(p, lv);
    if (fsz + static_cast<long>(lv.bound.back()) <= shared_.best.load(std::memory_order_relaxed)) return;
    Word* child = lv.scratch.data();

    if (nontrivial) {
      for (std::size_t i = lv.order.size(); i-- > 0;) {
        if (fsz + static_cast<long>(lv.bound[i]) <= shared_.best.load(std::memory_order_relaxed)) return;
        const std::size_t v = lv.order[i];
        push(v);
        child_candidates(p, v, child);
        expand(depth + 1, child, mask, true);
        pop();
        reset_bit(p, v);
        if (shared_.aborted.load(std::memory_order_relaxed)) return;
      }
      return;
    }

    // Still trivial: some member of the breaker set X must be added.
    Word x[kMaxWords];
    if (family_.empty()) {
      std::memcpy(x, p, inst_.w * sizeof(Word));
    } else if (cfg_.nt == NonTrivial::kFixedMask) {
      const std::size_t ref = family_.front();
      const int need = std::popcount(mask) - cfg_.param + 1;
      int breakable = 0;
      std::memset(x, 0, inst_.w * sizeof(Word));
      for (int l = 0; l < inst_.r; ++l) {
        if (!((mask >> l) & 1u)) continue;
        const Word* col = inst_.colset(l + 1, inst_.vecs[ref].coord(l + 1));
        bool any = false;
        for (std::size_t i = 0; i < inst_.w; ++i) {
          const Word b = p[i] & ~col[i];
          any = any || b != 0;
          x[i] |= b;
        }
        if (any) ++breakable;
      }
      if (breakable < need) return;
    } else {
      // Prune when family plus every candidate still has a small cover.
      Word all[kMaxWords];
      for (std::size_t i = 0; i < inst_.w; ++i) all[i] = p[i] | fam_bits_[i];
      std::vector<std::pair<int, int>> tmp;
      if (find_cover(all, cfg_.param, tmp)) return;
      std::vector<std::pair<int, int>> cover;
      find_cover(fam_bits_.data(), cfg_.param, cover);
      std::memcpy(x, p, inst_.w * sizeof(Word));
      for (const auto& [l, s] : cover) {
        const Word* col = inst_.colset(l, s);
        for (std::size_t i = 0; i < inst_.w; ++i) x[i] &= ~col[i];
      }
    }

    for (std::size_t v = first_bit(x, inst_.w); v < inst_.n; v = first_bit(x, inst_.w)) {
      reset_bit(x, v);
      push(v);
      child_candidates(p, v, child);
      const std::uint32_t child_mask = family_.size() == 1 ? full_mask() : (mask & agree_mask(family_.front(), v));
      const bool child_nt = compute_nontrivial(child_mask);
      expand(depth + 1, child, child_mask, child_nt);
      pop();
      reset_bit(p, v);
      if (shared_.aborted.load(std::memory_order_relaxed)) return;
      if (fsz + popcount_bits(p, inst_.w) <= shared_.best.load(std::memory_order_relaxed)) return;
    }
  }

  const Instance& inst_;
  EngineConfig cfg_;
  Shared& shared_;
  std::vector<std::size_t> family_;
  std::vector<Word> fam_bits_;
  std::vector<std::pair<int, int>> cover_;
  std::vector<std::size_t> kept_;
  std::deque<Level> levels_;
};

struct Subtree {
  EngineConfig cfg;
  std::vector<std::size_t> seed;
  std::vector<Word> cand;
};

// Equal-size classes of parts, each listed in increasing part order.
std::vector<std::vector<int>> size_classes(const PartSpec& spec) {
  std::vector<std::vector<int>> out;
  for (int l = 1; l <= spec.r(); ++l) {
    bool placed = false;
    for (auto& c : out) {
      if (spec.size(c.front()) == spec.size(l)) {
        c.push_back(l);
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back({l});
  }
  return out;
}

// Orbit representatives of vectors agreeing with (1,...,1) in exactly k
// coordinates: ones on the first k_j parts of each size class, 2 elsewhere.
std::vector<Edge> pair_representatives(const PartSpec& spec, int k) {
  const auto classes = size_classes(spec);
  std::vector<Edge> out;
  std::vector<int> take(classes.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int left) -> void {
    if (j == classes.size()) {
      if (left != 0) return;
      std::vector<int> coords(static_cast<std::size_t>(spec.r()), 2);
      for (std::size_t c = 0; c < classes.size(); ++c)
        for (int i = 0; i < take[c]; ++i) coords[static_cast<std::size_t>(classes[c][static_cast<std::size_t>(i)] - 1)] = 1;
      out.emplace_back(std::span<const int>(coords));
      return;
    }
    const int cap = std::min<int>(left, static_cast<int>(classes[j].size()));
    for (int a = cap; a >= 0; --a) {
      take[j] = a;
      self(self, j + 1, left - a);
    }
  };
  rec(rec, 0, k);
  return out;
}

std::optional<Family> seed_construction(const SearchProblem& p) {
  try {
    if (p.mode == SearchMode::kMatching) {
      if (!p.spec.is_uniform() || p.spec.r() < 3) return std::nullopt;
      return construct_E(p.spec, p.param);
    }
    Family a = construct_W_rt(p.spec, p.param);
    Family b = construct_K_rt(p.spec, p.param);
    return a.size() >= b.size() ? a : b;
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

}  // namespace

SearchResult solve(const SearchProblem& p, const SearchOptions& options) {
  validate_problem(p);
  const auto started = std::chrono::steady_clock::now();
  if (p.spec.vector_count() > options.max_vectors) {
    throw BudgetExceeded("search space has " + std::to_string(p.spec.vector_count()) +
                         " vectors, above the cap of " + std::to_string(options.max_vectors));
  }
  Instance inst(p.spec);
  const int r = p.spec.r();
  const bool matching = p.mode == SearchMode::kMatching;
  const int s = p.param;

  // Matching with s = 1 is the pairwise-intersecting problem with t = 1.
  const NonTrivial nt = (!matching || s == 1) ? NonTrivial::kFixedMask : NonTrivial::kCover;
  const int nt_param = matching && s == 1 ? 1 : p.param;
  const int min_k = matching ? (s == 1 ? 1 : 0) : p.param;

  auto config_for = [&](int k) {
    EngineConfig c;
    c.nt = nt;
    if (k == 0) {
      c.compat = Compat::kMatching;
      c.param = s;
    } else {
      c.compat = Compat::kPairwise;
      c.k = k;
      c.param = nt_param;
    }
    return c;
  };

  std::vector<Subtree> subtrees;
  if (options.symmetry) {
    const std::size_t ones = 0;  // (1,...,1) has rank 0
    for (int k = min_k; k <= r - 1; ++k) {
      if (k == 0) inst.build_disjoint_rows();
      else inst.build_agree_rows(k);
      for (const Edge& w : pair_representatives(p.spec, k)) {
        Subtree st;
        st.cfg = config_for(k);
        const std::size_t wi = edge_rank(p.spec, w);
        st.seed = {ones, wi};
        st.cand.assign(inst.w, ~Word{0});
        if (inst.n & 63) st.cand[inst.w - 1] = (Word{1} << (inst.n & 63)) - 1;
        if (k > 0) {
          const Word* ra = inst.agree_row(k, ones);
          const Word* rw = inst.agree_row(k, wi);
          for (std::size_t i = 0; i < inst.w; ++i) st.cand[i] &= ra[i] & rw[i];
        }
        reset_bit(st.cand.data(), ones);
        reset_bit(st.cand.data(), wi);
        subtrees.push_back(std::move(st));
      }
    }
  } else {
    Subtree st;
    st.cfg = config_for(min_k);
    if (min_k == 0) inst.build_disjoint_rows();
    else inst.build_agree_rows(min_k);
    st.cand.assign(inst.w, ~Word{0});
    if (inst.n & 63) st.cand[inst.w - 1] = (Word{1} << (inst.n & 63)) - 1;
    subtrees.push_back(std::move(st));
  }
  // The matching filter also needs disjointness rows.
  for (const auto& st : subtrees)
    if (st.cfg.compat == Compat::kMatching) inst.build_disjoint_rows();

  Shared shared;
  shared.limit = options.node_limit;
  if (options.seed_with_construction) {
    if (auto seed = seed_construction(p); seed && is_feasible(*seed, p) && is_nontrivial(*seed, p)) {
      shared.best = static_cast<long>(seed->size());
      for (const Edge& e : *seed) shared.witness.push_back(edge_rank(p.spec, e));
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < subtrees.size(); i = next.fetch_add(1)) {
      Engine engine(inst, subtrees[i].cfg, shared);
      engine.run(subtrees[i].seed, subtrees[i].cand.data());
      if (shared.aborted.load()) return;
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<Edge> edges;
  for (std::size_t v : shared.witness) edges.push_back(inst.vecs[v]);
  Family raw = make_family(p.spec, std::move(edges));
  if (!raw.empty() && (!is_feasible(raw, p) || !is_nontrivial(raw, p))) {
    throw InternalConsistencyError("search produced an infeasible witness for " + p.to_string());
  }
  CanonicalForm canon = canonical_form(raw, options.canonical_cap);

  SearchResult out(std::move(canon.family));
  out.optimum = shared.best.load();
  out.nodes_explored = std::min(shared.nodes.load(), shared.limit);
  out.exhaustive = !shared.aborted.load();
  out.witness_canonical_exact = canon.exact;
  if (auto f = reference_formula(p)) {
    out.matched_formula = FormulaMatch{f->name, f->value, f->value == BigInt(out.optimum)};
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return out;
}

}  // namespace partex
