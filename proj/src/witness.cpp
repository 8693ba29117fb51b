#include "hypertree/witness.hpp"

#include <algorithm>
#include <set>

namespace hypertree {

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

// Collects the window starting at each of the given positions, sorted; all
// of them must be edges of h and pairwise distinct. `cyclic` wraps indices.
bool check_windows(const Hypergraph& h, const std::vector<int>& seq,
                   int window_count, bool cyclic, std::string* why) {
  const int k = h.uniformity();
  std::set<std::vector<int>> seen;
  for (int i = 0; i < window_count; ++i) {
    std::vector<int> w(k);
    for (int t = 0; t < k; ++t)
      w[t] = seq[cyclic ? (i + t) % seq.size() : i + t];
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
      return fail(why, "window " + std::to_string(i) + " repeats a vertex");
    if (!h.has_edge_sorted(w))
      return fail(why, "window " + std::to_string(i) + " is not an edge");
    if (!seen.insert(std::move(w)).second)
      return fail(why, "window " + std::to_string(i) + " repeats an edge");
  }
  return true;
}

bool vertices_in_range(const Hypergraph& h, const std::vector<int>& seq,
                       std::string* why) {
  for (int v : seq)
    if (v < 0 || v >= h.vertex_count())
      return fail(why, "vertex id out of range");
  return true;
}

}  // namespace

bool validate_chain_witness(const Hypergraph& h, const ChainWitness& w,
                            std::string* why) {
  const int k = h.uniformity();
  const int l = static_cast<int>(w.sequence.size());
  if (l < k) return fail(why, "sequence shorter than the uniformity");
  if (!vertices_in_range(h, w.sequence, why)) return false;
  if (w.sequence.front() == w.sequence.back())
    return fail(why, "first and last vertex coincide");
  std::vector<int> sorted = w.sequence;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return fail(why, "sequence repeats a vertex");
  return check_windows(h, w.sequence, l - k + 1, false, why);
}

bool validate_semicycle_witness(const Hypergraph& h, const SemicycleWitness& w,
                                std::string* why) {
  const int k = h.uniformity();
  const int l = static_cast<int>(w.sequence.size());
  if (l - k + 1 < 3) return fail(why, "fewer than 3 window-edges");
  if (!vertices_in_range(h, w.sequence, why)) return false;
  if (w.sequence.front() != w.sequence.back())
    return fail(why, "sequence does not close on its first vertex");
  std::vector<int> interior(w.sequence.begin(), w.sequence.end() - 1);
  std::sort(interior.begin(), interior.end());
  if (std::adjacent_find(interior.begin(), interior.end()) != interior.end())
    return fail(why, "sequence repeats an interior vertex");
  return check_windows(h, w.sequence, l - k + 1, false, why);
}

bool validate_cycle_witness(const Hypergraph& h, const CycleWitness& w,
                            std::string* why) {
  const int k = h.uniformity();
  const int l = static_cast<int>(w.sequence.size());
  if (l < k + 1) return fail(why, "fewer than k+1 window-edges");
  if (!vertices_in_range(h, w.sequence, why)) return false;
  return check_windows(h, w.sequence, l, true, why);
}

}  // namespace hypertree
