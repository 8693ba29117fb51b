#include "hypertree/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "hypertree/combinatorics.hpp"
#include "hypertree/io.hpp"
#include "hypertree/line_graph.hpp"

namespace hypertree {

namespace {

std::vector<std::vector<int>> build_universe(int n, int k) {
  std::vector<std::vector<int>> u;
  for_each_subset(n, k, [&](const std::vector<int>& s) { u.push_back(s); });
  return u;
}

// Subset-index remap tables, one per vertex permutation: table[i] is the
// universe position of the permuted i-th universe edge.
std::vector<std::vector<int>> build_remap_tables(
    int n, const std::vector<std::vector<int>>& universe) {
  std::vector<std::vector<int>> tables;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> sorted_universe = universe;  // already sorted
  do {
    std::vector<int> table(universe.size());
    std::vector<int> mapped;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      mapped.clear();
      for (int v : universe[i]) mapped.push_back(perm[v]);
      std::sort(mapped.begin(), mapped.end());
      auto it = std::lower_bound(sorted_universe.begin(),
                                 sorted_universe.end(), mapped);
      table[i] = static_cast<int>(it - sorted_universe.begin());
    }
    tables.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

std::uint64_t canonical_form(std::uint64_t subset,
                             const std::vector<std::vector<int>>& tables) {
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& table : tables) {
    std::uint64_t mapped = 0;
    std::uint64_t rest = subset;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      mapped |= std::uint64_t{1} << table[i];
    }
    best = std::min(best, mapped);
  }
  return best;
}

bool wins_min(int m, std::uint64_t idx, const std::optional<InstanceWitness>& cur) {
  if (!cur) return true;
  int cm = static_cast<int>(cur->edges.size());
  return m < cm || (m == cm && idx < cur->index);
}

bool wins_max(int m, std::uint64_t idx, const std::optional<InstanceWitness>& cur) {
  if (!cur) return true;
  int cm = static_cast<int>(cur->edges.size());
  return m > cm || (m == cm && idx < cur->index);
}

struct SweepContext {
  int n, k;
  const std::vector<std::vector<int>>& universe;
  const std::vector<std::vector<int>>* remap_tables;  // null without iso
  const EnumerationOptions& opts;
  std::uint64_t lower_bound;
  std::uint64_t upper_bound;
  bool lower_applicable;
};

void classify_subset(const SweepContext& ctx, std::uint64_t subset,
                     EnumerationStats& stats) {
  std::vector<std::vector<int>> edges;
  {
    std::uint64_t rest = subset;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      edges.push_back(ctx.universe[i]);
    }
  }
  if (ctx.opts.cover_all_vertices) {
    Bitset covered(ctx.n);
    for (const auto& e : edges)
      for (int v : e) covered.set(v);
    if (covered.count() != ctx.n) {
      ++stats.skipped_non_covering;
      return;
    }
  }
  ++stats.total_edge_sets;
  Hypergraph h = Hypergraph::from_canonical(ctx.k, ctx.n, edges);

  const bool cc = is_chain_connected(h, ctx.opts.limits);
  const auto semicycle = find_semicycle(h, ctx.opts.limits);
  const bool scf = !semicycle.has_value();
  const bool ht = cc && scf;
  const int m = h.edge_count();

  stats.chain_connected += cc;
  stats.semicycle_free += scf;
  stats.hypertree += ht;

  if (ht) {
    if (wins_min(m, subset, stats.min_hypertree))
      stats.min_hypertree = InstanceWitness{subset, edges};
    if (wins_max(m, subset, stats.max_hypertree))
      stats.max_hypertree = InstanceWitness{subset, edges};

    bool minimal = true;
    for (int i = 0; i < m && minimal; ++i)
      minimal = !is_chain_connected(h.without_edge(i), ctx.opts.limits);
    bool maximal = true;
    for_each_subset(ctx.n, ctx.k, [&](const std::vector<int>& f) {
      if (!maximal || h.has_edge_sorted(f)) return;
      if (!find_semicycle(h.with_edge(f), ctx.opts.limits)) maximal = false;
    });
    stats.edge_minimal += minimal;
    stats.edge_maximal += maximal;
    if (minimal && wins_max(m, subset, stats.max_edge_minimal))
      stats.max_edge_minimal = InstanceWitness{subset, edges};
    if (maximal && wins_min(m, subset, stats.min_edge_maximal))
      stats.min_edge_maximal = InstanceWitness{subset, edges};

    if (ctx.remap_tables) {
      std::uint64_t canon = canonical_form(subset, *ctx.remap_tables);
      stats.hypertree_iso_classes->insert(canon);
      if (minimal) stats.edge_minimal_iso_classes->insert(canon);
      if (maximal) stats.edge_maximal_iso_classes->insert(canon);
    }
  }

  // per-instance verification of the two edge bounds
  if (cc && ctx.lower_applicable &&
      static_cast<std::uint64_t>(m) < ctx.lower_bound)
    ++stats.lower_bound_violations;
  if (scf && static_cast<std::uint64_t>(m) > ctx.upper_bound)
    ++stats.upper_bound_violations;

  // a tight cycle inside a semicycle-free hypergraph would contradict the
  // containment of semicycles in cycles
  if (scf && find_tight_cycle(h, ctx.opts.limits))
    ++stats.cycle_implication_violations;

  // every vertex pair of a chain-connected hypergraph must lie inside a
  // single class of the tight-line-graph decomposition
  if (cc && ctx.n >= 2) {
    ClassDecomposition d = class_decomposition(h);
    bool covered_pairs = true;
    for (int u = 0; u < ctx.n && covered_pairs; ++u)
      for (int v = u + 1; v < ctx.n && covered_pairs; ++v) {
        bool in_one = false;
        for (const auto& cls : d.classes)
          if (cls.test(u) && cls.test(v)) {
            in_one = true;
            break;
          }
        covered_pairs = in_one;
      }
    if (!covered_pairs) ++stats.class_coverage_violations;
  }

  if (ctx.opts.oracle_sample_stride > 0 &&
      subset % ctx.opts.oracle_sample_stride == 0) {
    ++stats.oracle_agreement_checked;
    bool general = has_semicycle_general(h, -1, ctx.opts.limits);
    if (general != semicycle.has_value()) ++stats.oracle_agreement_violations;
  }
}

EnumerationStats fresh_stats(int n, int k, int universe_size, bool iso) {
  EnumerationStats s;
  s.n = n;
  s.k = k;
  s.universe_size = universe_size;
  if (iso) {
    s.hypertree_iso_classes.emplace();
    s.edge_minimal_iso_classes.emplace();
    s.edge_maximal_iso_classes.emplace();
  }
  return s;
}

void merge_witness_min(std::optional<InstanceWitness>& a,
                       const std::optional<InstanceWitness>& b) {
  if (b && wins_min(static_cast<int>(b->edges.size()), b->index, a)) a = *b;
}

void merge_witness_max(std::optional<InstanceWitness>& a,
                       const std::optional<InstanceWitness>& b) {
  if (b && wins_max(static_cast<int>(b->edges.size()), b->index, a)) a = *b;
}

void merge_iso(std::optional<std::set<std::uint64_t>>& a,
               const std::optional<std::set<std::uint64_t>>& b) {
  if (!b) return;
  if (!a) {
    a = *b;
    return;
  }
  a->insert(b->begin(), b->end());
}

std::filesystem::path unit_path(const std::filesystem::path& dir,
                                int prefix_bits, std::uint64_t unit) {
  return dir / ("unit_" + std::to_string(prefix_bits) + "_" +
                std::to_string(unit) + ".json");
}

}  // namespace

void merge_stats(EnumerationStats& a, const EnumerationStats& b) {
  a.total_edge_sets += b.total_edge_sets;
  a.skipped_non_covering += b.skipped_non_covering;
  a.chain_connected += b.chain_connected;
  a.semicycle_free += b.semicycle_free;
  a.hypertree += b.hypertree;
  a.edge_minimal += b.edge_minimal;
  a.edge_maximal += b.edge_maximal;
  merge_witness_min(a.min_hypertree, b.min_hypertree);
  merge_witness_max(a.max_hypertree, b.max_hypertree);
  merge_witness_max(a.max_edge_minimal, b.max_edge_minimal);
  merge_witness_min(a.min_edge_maximal, b.min_edge_maximal);
  a.lower_bound_violations += b.lower_bound_violations;
  a.upper_bound_violations += b.upper_bound_violations;
  a.cycle_implication_violations += b.cycle_implication_violations;
  a.oracle_agreement_checked += b.oracle_agreement_checked;
  a.oracle_agreement_violations += b.oracle_agreement_violations;
  a.class_coverage_violations += b.class_coverage_violations;
  merge_iso(a.hypertree_iso_classes, b.hypertree_iso_classes);
  merge_iso(a.edge_minimal_iso_classes, b.edge_minimal_iso_classes);
  merge_iso(a.edge_maximal_iso_classes, b.edge_maximal_iso_classes);
}

EnumerationStats enumerate_all(int n, int k, const EnumerationOptions& opts) {
  if (k < 2 || n < k) throw ParamError("enumeration requires n >= k >= 2");
  if (!binomial_within(n, k, static_cast<std::uint64_t>(opts.max_universe_bits)))
    throw SizeError("the universe has more than " +
                    std::to_string(opts.max_universe_bits) +
                    " candidate edges; raise max_universe_bits to override");
  if (opts.isomorphism_reduce && n > 8)
    throw SizeError("isomorphism reduction is limited to n <= 8");

  const auto universe = build_universe(n, k);
  const int ubits = static_cast<int>(universe.size());
  std::vector<std::vector<int>> remap_tables;
  if (opts.isomorphism_reduce)
    remap_tables = build_remap_tables(n, universe);

  const std::uint64_t lower = static_cast<std::uint64_t>(n - (k - 1));
  const std::uint64_t upper = binomial(n, k - 1);
  SweepContext ctx{n,
                   k,
                   universe,
                   opts.isomorphism_reduce ? &remap_tables : nullptr,
                   opts,
                   lower,
                   upper,
                   n >= (k - 1) * (k - 1) || k <= 5};

  // fixed high-bit prefixes as work units; the totals do not depend on the
  // partitioning, only reproducibility and checkpointing do
  const int prefix_bits = std::clamp(ubits - 8, 0, 10);
  const std::uint64_t unit_count = std::uint64_t{1} << prefix_bits;
  const int shift = ubits - prefix_bits;

  if (opts.checkpoint_dir)
    std::filesystem::create_directories(*opts.checkpoint_dir);

  std::vector<EnumerationStats> unit_stats(
      unit_count, fresh_stats(n, k, ubits, opts.isomorphism_reduce));
  std::atomic<std::uint64_t> next_unit{0};
  std::exception_ptr failure;
  std::mutex failure_lock;

  auto run_unit = [&](std::uint64_t unit) {
    if (opts.checkpoint_dir) {
      auto file = unit_path(*opts.checkpoint_dir, prefix_bits, unit);
      if (std::filesystem::exists(file)) {
        try {
          std::ifstream in(file);
          nlohmann::json j = nlohmann::json::parse(in);
          if (j.at("n") == n && j.at("k") == k &&
              j.at("prefix_bits") == prefix_bits && j.at("unit") == unit &&
              j.at("cover_all") == opts.cover_all_vertices &&
              j.at("iso") == opts.isomorphism_reduce &&
              j.at("stride") == opts.oracle_sample_stride) {
            unit_stats[unit] = stats_from_json(j.at("stats"));
            return;
          }
        } catch (const std::exception&) {
          // unreadable checkpoint: recompute below
        }
      }
    }
    EnumerationStats& s = unit_stats[unit];
    const std::uint64_t from = unit << shift;
    const std::uint64_t to = (unit + 1) << shift;
    for (std::uint64_t subset = from; subset < to; ++subset)
      classify_subset(ctx, subset, s);
    if (opts.checkpoint_dir) {
      nlohmann::json j{{"n", n},
                       {"k", k},
                       {"prefix_bits", prefix_bits},
                       {"unit", unit},
                       {"cover_all", opts.cover_all_vertices},
                       {"iso", opts.isomorphism_reduce},
                       {"stride", opts.oracle_sample_stride},
                       {"stats", to_json(s)}};
      std::ofstream out(unit_path(*opts.checkpoint_dir, prefix_bits, unit));
      out << j.dump() << "\n";
    }
  };

  auto worker = [&]() {
    try {
      while (true) {
        std::uint64_t unit = next_unit.fetch_add(1);
        if (unit >= unit_count) return;
        run_unit(unit);
      }
    } catch (...) {
      std::lock_guard<std::mutex> g(failure_lock);
      if (!failure) failure = std::current_exception();
    }
  };

  const int workers = std::max(1, opts.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  EnumerationStats total = fresh_stats(n, k, ubits, opts.isomorphism_reduce);
  for (const auto& s : unit_stats) merge_stats(total, s);
  return total;
}

ConjectureProbe conjecture_probe(int n, int k,
                                 const EnumerationOptions& opts) {
  EnumerationStats stats = enumerate_all(n, k, opts);
  ConjectureProbe p;
  p.n = n;
  p.k = k;
  p.pair_count = binomial(n, 2);
  p.edge_minimal_count = stats.edge_minimal;
  p.edge_maximal_count = stats.edge_maximal;
  if (stats.max_edge_minimal)
    p.max_edge_minimal_edges =
        static_cast<int>(stats.max_edge_minimal->edges.size());
  if (stats.min_edge_maximal)
    p.min_edge_maximal_edges =
        static_cast<int>(stats.min_edge_maximal->edges.size());
  p.degenerate = !p.max_edge_minimal_edges || !p.min_edge_maximal_edges;
  if (p.max_edge_minimal_edges)
    p.edge_minimal_bound_violated =
        static_cast<std::uint64_t>(*p.max_edge_minimal_edges) * (k - 1) >
        p.pair_count;
  if (p.min_edge_maximal_edges)
    p.edge_maximal_below_reference =
        static_cast<std::uint64_t>(*p.min_edge_maximal_edges) * 2 <
        p.pair_count;
  return p;
}

}  // namespace hypertree
