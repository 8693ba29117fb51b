#include "hypertree/recognition.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hypertree/combinatorics.hpp"

namespace hypertree {

namespace {

[[noreturn]] void budget_blown(std::uint64_t cap) {
  throw BudgetExceeded("search exceeded the node-expansion budget of " +
                       std::to_string(cap));
}

// Depth-first enumeration of non-self-intersecting runs: vertex sequences
// with pairwise distinct entries in which every window of k consecutive
// vertices is an edge. Seeds are all vertex orders of every edge, edges in
// canonical order, orders lexicographic; extensions happen at the right end
// in ascending vertex order. Window-edges of such a run are automatically
// pairwise distinct, so every run of length >= k is a chain.
class RunDfs {
 public:
  RunDfs(const Hypergraph& h, const SearchLimits& limits)
      : h_(h),
        k_(h.uniformity()),
        limits_(limits),
        in_run_(h.vertex_count()),
        bufs_(h.vertex_count() + 1) {
    run_.reserve(h.vertex_count());
  }

  const std::vector<int>& run() const { return run_; }

  /// visit(pushed) is called once per seed (pushed = -1) and once per
  /// extension (pushed = the new vertex); returning false stops the whole
  /// search.
  template <class Visit>
  void search(Visit&& visit) {
    std::vector<int> perm(k_);
    for (int e = 0; e < h_.edge_count(); ++e) {
      perm = h_.edge(e);
      do {
        charge();
        run_.assign(perm.begin(), perm.end());
        in_run_.reset_all();
        for (int v : perm) in_run_.set(v);
        if (!visit(-1)) return;
        if (!extend(visit)) return;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

 private:
  void charge() {
    if (++expansions_ > limits_.max_expansions)
      budget_blown(limits_.max_expansions);
  }

  // Vertices y (ascending) such that the last k-1 run vertices plus y form
  // an edge and y is unused. Each covering edge contributes exactly one y.
  void candidates(std::vector<int>& out) {
    out.clear();
    const int len = static_cast<int>(run_.size());
    Bitset cover = h_.incident_edges(run_[len - k_ + 1]);
    for (int i = len - k_ + 2; i < len; ++i)
      cover &= h_.incident_edges(run_[i]);
    cover.for_each([&](int e) {
      for (int w : h_.edge(e)) {
        bool in_tail = false;
        for (int i = len - k_ + 1; i < len; ++i)
          if (run_[i] == w) {
            in_tail = true;
            break;
          }
        if (!in_tail) {
          if (!in_run_.test(w)) out.push_back(w);
          break;
        }
      }
    });
    std::sort(out.begin(), out.end());
  }

  template <class Visit>
  bool extend(Visit&& visit) {
    const int len = static_cast<int>(run_.size());
    auto& cand = bufs_[len];
    candidates(cand);
    for (std::size_t i = 0; i < bufs_[len].size(); ++i) {
      const int y = bufs_[len][i];
      charge();
      run_.push_back(y);
      in_run_.set(y);
      bool keep = visit(y);
      if (keep) keep = extend(visit);
      in_run_.reset(run_.back());
      run_.pop_back();
      if (!keep) return false;
    }
    return true;
  }

  const Hypergraph& h_;
  const int k_;
  SearchLimits limits_;
  std::uint64_t expansions_ = 0;
  std::vector<int> run_;
  Bitset in_run_;
  std::vector<std::vector<int>> bufs_;
};

// Depth-first enumeration of tight walks: sequences that may revisit
// vertices, in which every window is an edge and the windows used so far
// are pairwise distinct edges. The last k-1 entries of a walk are always
// distinct (they sit inside the last window), so extension candidates are
// exactly the unused edges covering that tail.
class WalkDfs {
 public:
  WalkDfs(const Hypergraph& h, int max_len, const SearchLimits& limits)
      : h_(h),
        k_(h.uniformity()),
        max_len_(max_len),
        limits_(limits),
        used_(h.edge_count()),
        bufs_(std::max(max_len, h.uniformity()) + 1) {
    run_.reserve(bufs_.size());
  }

  const std::vector<int>& run() const { return run_; }
  const Bitset& used_edges() const { return used_; }

  template <class Visit>
  void search(Visit&& visit) {
    std::vector<int> perm(k_);
    for (int e = 0; e < h_.edge_count(); ++e) {
      perm = h_.edge(e);
      do {
        charge();
        run_.assign(perm.begin(), perm.end());
        used_.reset_all();
        used_.set(e);
        if (!visit()) return;
        if (!extend(visit)) return;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

 private:
  void charge() {
    if (++expansions_ > limits_.max_expansions)
      budget_blown(limits_.max_expansions);
  }

  void candidates(std::vector<std::pair<int, int>>& out) {
    out.clear();
    const int len = static_cast<int>(run_.size());
    Bitset cover = h_.incident_edges(run_[len - k_ + 1]);
    for (int i = len - k_ + 2; i < len; ++i)
      cover &= h_.incident_edges(run_[i]);
    cover.and_not(used_);
    cover.for_each([&](int e) {
      for (int w : h_.edge(e)) {
        bool in_tail = false;
        for (int i = len - k_ + 1; i < len; ++i)
          if (run_[i] == w) {
            in_tail = true;
            break;
          }
        if (!in_tail) {
          out.emplace_back(w, e);
          break;
        }
      }
    });
    std::sort(out.begin(), out.end());
  }

  template <class Visit>
  bool extend(Visit&& visit) {
    const int len = static_cast<int>(run_.size());
    if (len >= max_len_) return true;
    auto& cand = bufs_[len];
    candidates(cand);
    for (std::size_t i = 0; i < bufs_[len].size(); ++i) {
      const auto [y, e] = bufs_[len][i];
      charge();
      run_.push_back(y);
      used_.set(e);
      bool keep = visit();
      if (keep) keep = extend(visit);
      used_.reset(e);
      run_.pop_back();
      if (!keep) return false;
    }
    return true;
  }

  const Hypergraph& h_;
  const int k_;
  const int max_len_;
  SearchLimits limits_;
  std::uint64_t expansions_ = 0;
  std::vector<int> run_;
  Bitset used_;
  std::vector<std::vector<std::pair<int, int>>> bufs_;
};

int default_walk_cap(const Hypergraph& h, int requested) {
  return requested > 0 ? requested : h.vertex_count() + h.uniformity();
}

void check_vertex(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.vertex_count())
    throw RangeError("vertex id " + std::to_string(v) + " outside [0," +
                     std::to_string(h.vertex_count()) + ")");
}

int pair_slot(int n, int a, int b) { return a < b ? a * n + b : b * n + a; }

}  // namespace

std::optional<ChainWitness> find_chain(const Hypergraph& h, int u, int v,
                                       const SearchLimits& limits) {
  check_vertex(h, u);
  check_vertex(h, v);
  if (u == v) throw PreconditionError("chain endpoints must differ");
  if (h.edge_count() == 0 || h.is_vertex_isolated(u) ||
      h.is_vertex_isolated(v))
    return std::nullopt;

  std::optional<ChainWitness> found;
  RunDfs dfs(h, limits);
  dfs.search([&](int) {
    const auto& run = dfs.run();
    bool has_u = false, has_v = false;
    for (int x : run) {
      has_u |= x == u;
      has_v |= x == v;
    }
    if (has_u && has_v) {
      found = ChainWitness{run};
      return false;
    }
    return true;
  });
  return found;
}

bool is_chain_connected(const Hypergraph& h, const SearchLimits& limits) {
  const int n = h.vertex_count();
  if (n <= 1) return true;
  if (!h.isolated_vertices().empty()) return false;

  const int total = n * (n - 1) / 2;
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(n) * n, 0);
  int count = 0;
  auto mark = [&](int a, int b) {
    auto& c = covered[pair_slot(n, a, b)];
    if (!c) {
      c = 1;
      ++count;
    }
  };

  RunDfs dfs(h, limits);
  dfs.search([&](int pushed) {
    const auto& run = dfs.run();
    if (pushed < 0) {
      for (std::size_t i = 0; i < run.size(); ++i)
        for (std::size_t j = i + 1; j < run.size(); ++j) mark(run[i], run[j]);
    } else {
      for (int x : run)
        if (x != pushed) mark(x, pushed);
    }
    return count < total;
  });
  return count == total;
}

PairChainTable chain_connectivity_table(const Hypergraph& h,
                                        const SearchLimits& limits) {
  const int n = h.vertex_count();
  PairChainTable table;
  table.n = n;
  table.witnesses.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  if (n <= 1) {
    table.connected = true;
    return table;
  }

  const int total = n * (n - 1) / 2;
  int count = 0;
  RunDfs dfs(h, limits);
  auto mark = [&](int a, int b, const std::vector<int>& run) {
    auto& slot = table.witnesses[pair_slot(n, a, b)];
    if (!slot) {
      slot = ChainWitness{run};
      ++count;
    }
  };
  if (h.isolated_vertices().empty()) {
    dfs.search([&](int pushed) {
      const auto& run = dfs.run();
      if (pushed < 0) {
        for (std::size_t i = 0; i < run.size(); ++i)
          for (std::size_t j = i + 1; j < run.size(); ++j)
            mark(run[i], run[j], run);
      } else {
        for (int x : run)
          if (x != pushed) mark(x, pushed, run);
      }
      return count < total;
    });
  }
  table.connected = count == total;
  return table;
}

std::optional<SemicycleWitness> find_semicycle(const Hypergraph& h,
                                               const SearchLimits& limits) {
  const int k = h.uniformity();
  if (h.edge_count() < 3) return std::nullopt;

  std::optional<SemicycleWitness> found;
  RunDfs dfs(h, limits);
  std::vector<int> closing, window;
  closing.reserve(k);
  window.reserve(k);
  dfs.search([&](int) {
    const auto& run = dfs.run();
    const int len = static_cast<int>(run.size());
    if (len < k + 1) return true;
    // closing window: the last k-1 vertices followed by the first vertex
    closing.assign(run.end() - (k - 1), run.end());
    closing.push_back(run.front());
    std::sort(closing.begin(), closing.end());
    if (!h.has_edge_sorted(closing)) return true;
    // distinct vertices make the run windows pairwise distinct; re-check the
    // closing window against each of them explicitly
    for (int i = 0; i + k <= len; ++i) {
      window.assign(run.begin() + i, run.begin() + i + k);
      std::sort(window.begin(), window.end());
      if (window == closing) return true;
    }
    std::vector<int> seq = run;
    seq.push_back(run.front());
    found = SemicycleWitness{std::move(seq)};
    return false;
  });
  return found;
}

std::optional<CycleWitness> find_tight_cycle(const Hypergraph& h,
                                             const SearchLimits& limits) {
  const int k = h.uniformity();
  const int m = h.edge_count();
  if (m < k + 1) return std::nullopt;

  std::optional<CycleWitness> found;
  WalkDfs dfs(h, m + k - 1, limits);
  dfs.search([&]() {
    const auto& run = dfs.run();
    const int len = static_cast<int>(run.size());
    if (len < 2 * k) return true;
    // the walk closes when its last k-1 entries repeat its first k-1 in order
    if (!std::equal(run.end() - (k - 1), run.end(), run.begin())) return true;
    found = CycleWitness{std::vector<int>(run.begin(), run.end() - (k - 1))};
    return false;
  });
  return found;
}

bool is_hypertree(const Hypergraph& h, const SearchLimits& limits) {
  return is_chain_connected(h, limits) && !find_semicycle(h, limits);
}

bool is_edge_minimal(const Hypergraph& h, const SearchLimits& limits) {
  if (!is_hypertree(h, limits))
    throw NotAHypertreeError("edge-minimality is defined for hypertrees only");
  for (int i = 0; i < h.edge_count(); ++i)
    if (is_chain_connected(h.without_edge(i), limits)) return false;
  return true;
}

bool is_edge_maximal(const Hypergraph& h, const SearchLimits& limits) {
  if (!is_hypertree(h, limits))
    throw NotAHypertreeError("edge-maximality is defined for hypertrees only");
  bool maximal = true;
  for_each_subset(h.vertex_count(), h.uniformity(),
                  [&](const std::vector<int>& f) {
                    if (!maximal || h.has_edge_sorted(f)) return;
                    if (!find_semicycle(h.with_edge(f), limits))
                      maximal = false;
                  });
  return maximal;
}

int max_chain_length(const Hypergraph& h, const SearchLimits& limits) {
  if (h.edge_count() == 0)
    throw EmptyHypergraphError("no chains in an edgeless hypergraph");
  int longest = 0;
  RunDfs dfs(h, limits);
  dfs.search([&](int) {
    longest = std::max(longest, static_cast<int>(dfs.run().size()));
    return true;
  });
  return longest - h.uniformity() + 1;
}

std::vector<int> focus_vertices(const Hypergraph& h) {
  if (h.edge_count() == 0)
    throw EmptyHypergraphError("focus vertices need at least one edge");
  Bitset common = h.edge_mask(0);
  for (int i = 1; i < h.edge_count(); ++i) common &= h.edge_mask(i);
  return common.to_vector();
}

bool is_l_geometric(const Hypergraph& h, int l) {
  if (l < 1 || l > h.uniformity())
    throw ParamError("geometric parameter must satisfy 1 <= l <= k");
  bool geometric = true;
  for_each_subset(h.vertex_count(), l, [&](const std::vector<int>& s) {
    if (!geometric) return;
    Bitset cover = h.incident_edges(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) cover &= h.incident_edges(s[i]);
    if (cover.count() != 1) geometric = false;
  });
  if (geometric) {
    const std::uint64_t per_edge = binomial(h.uniformity(), l);
    if (static_cast<std::uint64_t>(h.edge_count()) * per_edge !=
        binomial(h.vertex_count(), l))
      throw InternalInvariantError(
          "geometric hypergraph violates the block-design edge count");
  }
  return geometric;
}

bool has_semicycle_general(const Hypergraph& h, int max_sequence_length,
                           const SearchLimits& limits) {
  const int k = h.uniformity();
  const int cap = default_walk_cap(h, max_sequence_length);
  if (h.edge_count() < 3) return false;

  bool found = false;
  WalkDfs dfs(h, cap - 1, limits);  // the closing vertex is appended virtually
  std::vector<int> closing;
  dfs.search([&]() {
    const auto& run = dfs.run();
    const int len = static_cast<int>(run.size());
    if (len < k + 1) return true;
    for (int i = len - k + 1; i < len; ++i)
      if (run[i] == run.front()) return true;  // window would repeat a vertex
    closing.assign(run.end() - (k - 1), run.end());
    closing.push_back(run.front());
    std::sort(closing.begin(), closing.end());
    int idx = h.edge_index_of_sorted(closing);
    if (idx < 0 || dfs.used_edges().test(idx)) return true;
    found = true;
    return false;
  });
  return found;
}

bool has_self_intersecting_chain(const Hypergraph& h, int max_sequence_length,
                                 const SearchLimits& limits) {
  const int cap = default_walk_cap(h, max_sequence_length);
  if (h.edge_count() == 0) return false;

  bool found = false;
  WalkDfs dfs(h, cap, limits);
  std::vector<int> sorted;
  dfs.search([&]() {
    const auto& run = dfs.run();
    if (run.front() == run.back()) return true;
    sorted = run;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool is_chain_connected_general(const Hypergraph& h, int max_sequence_length,
                                const SearchLimits& limits) {
  const int n = h.vertex_count();
  if (n <= 1) return true;
  if (!h.isolated_vertices().empty()) return false;
  const int cap = default_walk_cap(h, max_sequence_length);

  const int total = n * (n - 1) / 2;
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(n) * n, 0);
  int count = 0;
  WalkDfs dfs(h, cap, limits);
  dfs.search([&]() {
    const auto& run = dfs.run();
    if (run.front() == run.back()) return true;
    for (std::size_t i = 0; i < run.size(); ++i)
      for (std::size_t j = i + 1; j < run.size(); ++j) {
        if (run[i] == run[j]) continue;
        auto& c = covered[pair_slot(n, run[i], run[j])];
        if (!c) {
          c = 1;
          ++count;
        }
      }
    return count < total;
  });
  return count == total;
}

ClassificationReport classify(const Hypergraph& h,
                              const ClassifyOptions& opts) {
  ClassificationReport r;
  r.n = h.vertex_count();
  r.k = h.uniformity();
  r.m = h.edge_count();
  r.chain_connected = is_chain_connected(h, opts.limits);
  r.semicycle_free = !find_semicycle(h, opts.limits);
  r.hypertree = r.chain_connected && r.semicycle_free;

  const bool subsets_enumerable = binomial_within(
      h.vertex_count(), h.uniformity(), opts.subset_enumeration_cap);
  if (r.hypertree) {
    r.edge_minimal = is_edge_minimal(h, opts.limits);
    if (subsets_enumerable) r.edge_maximal = is_edge_maximal(h, opts.limits);
  }
  if (r.m > 0) {
    r.max_chain_length = max_chain_length(h, opts.limits);
    r.focus_vertices = focus_vertices(h);
  }
  r.line_graph_components = tight_line_graph(h).component_count();
  r.line_graph_connected = r.line_graph_components <= 1;
  if (r.m > 0) {
    for (int l = 1; l <= h.uniformity(); ++l) {
      if (!binomial_within(h.vertex_count(), l, opts.subset_enumeration_cap))
        continue;
      if (is_l_geometric(h, l)) {
        r.geometric_l = l;
        break;
      }
    }
  }
  if (opts.cross_check_chain_connectivity)
    r.chain_connected_general = is_chain_connected_general(h, -1, opts.limits);
  return r;
}

}  // namespace hypertree
