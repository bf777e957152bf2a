#include "intrep/invariants.hpp"

#include <algorithm>
#include <functional>

namespace intrep {

namespace {

std::pair<std::vector<int>, std::vector<int>> extremes(const Poset& Q) {
  std::vector<int> sources, sinks;
  for (int z = 0; z < Q.size(); ++z) {
    if (Q.hasse_down(z).empty()) sources.push_back(z);
    if (Q.hasse_up(z).empty()) sinks.push_back(z);
  }
  return {sources, sinks};
}

}  // namespace

ExtremalJoins extremal_joins(const Poset& Q) {
  auto [sources, sinks] = extremes(Q);
  ExtremalJoins out;
  const int n = static_cast<int>(sources.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Bitset common = Q.up_set(sources[i]) & Q.up_set(sources[j]);
      for (int c : common.to_indices()) {
        bool minimal = true;
        for (int w : common.to_indices())
          if (w != c && Q.leq(w, c)) {
            minimal = false;
            break;
          }
        if (minimal) out.source_joins.push_back({i, j, c});
      }
    }
  const int m = static_cast<int>(sinks.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Bitset common = Q.down_set(sinks[i]) & Q.down_set(sinks[j]);
      for (int d : common.to_indices()) {
        bool maximal = true;
        for (int w : common.to_indices())
          if (w != d && Q.leq(d, w)) {
            maximal = false;
            break;
          }
        if (maximal) out.sink_meets.push_back({i, j, d});
      }
    }
  return out;
}

namespace {

// One side of the prune. `below(j, w)` says the j-th extreme lies on the
// inner side of witness w. Rows are removed one at a time, widest pair
// gap first, and only while both supporting rows are still present.
std::vector<JoinWitness> prune_side(const std::vector<JoinWitness>& rows,
                                    int extreme_count,
                                    const std::function<bool(int, int)>& below) {
  // Pairwise witnesses must be unique for the reduction to apply.
  std::map<std::pair<int, int>, int> witness;
  for (const auto& w : rows) {
    if (witness.count({w.lo, w.hi})) return rows;
    witness[{w.lo, w.hi}] = w.elem;
  }
  if (static_cast<int>(witness.size()) !=
      extreme_count * (extreme_count - 1) / 2)
    return rows;

  std::map<std::pair<int, int>, bool> alive;
  for (const auto& [key, unused] : witness) alive[key] = true;
  auto present = [&](int i, int j) {
    return alive[{std::min(i, j), std::max(i, j)}];
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, int>> keys;
    for (const auto& [key, live] : alive)
      if (live) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](auto a, auto b) {
      return (a.second - a.first) > (b.second - b.first);
    });
    for (auto [i, k] : keys) {
      if (!alive[{i, k}]) continue;
      for (int j = 0; j < extreme_count; ++j) {
        if (j == i || j == k) continue;
        if (below(j, witness[{i, k}]) && present(i, j) && present(j, k)) {
          alive[{i, k}] = false;
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<JoinWitness> kept;
  for (const auto& w : rows)
    if (alive[{w.lo, w.hi}]) kept.push_back(w);
  return kept;
}

}  // namespace

ExtremalJoins redundancy_prune(const Poset& Q, const ExtremalJoins& joins) {
  auto [sources, sinks] = extremes(Q);
  ExtremalJoins out;
  out.source_joins = prune_side(
      joins.source_joins, static_cast<int>(sources.size()),
      [&](int j, int w) { return Q.leq(sources[j], w); });
  out.sink_meets = prune_side(
      joins.sink_meets, static_cast<int>(sinks.size()),
      [&](int j, int w) { return Q.leq(w, sinks[j]); });
  return out;
}

std::pair<int, int> comparable_pair(const Poset& Q) {
  auto [sources, sinks] = extremes(Q);
  for (int i = 0; i < static_cast<int>(sources.size()); ++i)
    for (int j = 0; j < static_cast<int>(sinks.size()); ++j)
      if (Q.leq(sources[i], sinks[j])) return {i, j};
  throw NoComparablePair("no source lies below any sink");
}

}  // namespace intrep
