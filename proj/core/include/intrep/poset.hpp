#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "intrep/bitset.hpp"
#include "intrep/errors.hpp"

namespace intrep {

// A finite poset. Elements are referred to by their index in the canonical
// order, which is the construction order (lexicographic for grids). All
// deterministic tie-breaking downstream relies on this order.
class Poset {
 public:
  // Builds the poset whose order is the reflexive-transitive closure of
  // `relations` (pairs of labels, meaning first <= second).
  static Poset from_relations(
      const std::vector<std::string>& elements,
      const std::vector<std::pair<std::string, std::string>>& relations);

  // The d-dimensional grid [n1] x ... x [nd] with the product order.
  // Elements are coordinate tuples listed lexicographically.
  static Poset grid(const std::vector<int>& sizes);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }
  int index_of(const std::string& label) const;
  bool has_label(const std::string& label) const {
    return index_.count(label) > 0;
  }

  bool leq(int x, int y) const { return up_[x].test(y); }
  const Bitset& up_set(int x) const { return up_[x]; }
  const Bitset& down_set(int x) const { return down_[x]; }

  // Covering pairs (x, y) with x < y and [x,y] = {x,y}.
  const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }
  const std::vector<int>& hasse_up(int x) const { return hasse_up_[x]; }
  const std::vector<int>& hasse_down(int x) const { return hasse_down_[x]; }

  // Indices in some linear extension of <=.
  std::vector<int> topological_order() const;

  bool is_grid() const { return !grid_sizes_.empty(); }
  const std::vector<int>& grid_sizes() const { return grid_sizes_; }
  // 1-based coordinates; only valid for grids.
  const std::vector<int>& grid_coords(int x) const { return coords_[x]; }

  // Full subposet on the given (ambient-sorted) member indices. Labels are
  // inherited; the grid flag is not (a subposet of a grid is not a grid).
  Poset induced(const std::vector<int>& members) const;

 private:
  Poset() = default;
  void finish_construction();  // derives down-sets, Hasse arrows

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bitset> up_, down_;
  std::vector<std::pair<int, int>> hasse_;
  std::vector<std::vector<int>> hasse_up_, hasse_down_;
  std::vector<int> grid_sizes_;
  std::vector<std::vector<int>> coords_;
};

using PosetPtr = std::shared_ptr<const Poset>;

// An order-preserving map between posets.
struct PosetMap {
  PosetPtr source;
  PosetPtr target;
  std::vector<int> vertex_map;  // source index -> target index

  static PosetMap make(PosetPtr source, PosetPtr target,
                       std::vector<int> vertex_map);
  static PosetMap identity(PosetPtr poset);
  // g after f.
  static PosetMap compose(const PosetMap& g, const PosetMap& f);

  int operator()(int x) const { return vertex_map[x]; }
};

// A connected convex subset, stored with its source/sink antichains.
struct Interval {
  std::vector<int> members;  // sorted canonical indices
  std::vector<int> sources;  // minimal members, canonical order
  std::vector<int> sinks;    // maximal members, canonical order
  Bitset bits;
};

// Union of all segments [a,b] with a,b in xs. One pass suffices: the union
// is already closed under betweenness.
std::vector<int> convex_hull(const Poset& P, const std::vector<int>& xs);

// True iff xs is nonempty, connected and convex.
bool interval_check(const Poset& P, const std::vector<int>& xs);
bool interval_check(const Poset& P, const Bitset& xs);

// Minimal and maximal elements of a subset, in canonical order.
std::pair<std::vector<int>, std::vector<int>> sources_sinks(
    const Poset& P, const std::vector<int>& members);

// Throws NotConnected if members is not an interval.
Interval make_interval(const Poset& P, std::vector<int> members);

// conv of the union; throws NotConnected when the hull is not an interval.
Interval join_intervals(const Poset& P, const std::vector<Interval>& parts);

// All intervals of a poset, in canonical order (cardinality, then
// lexicographic on member lists), with containment and covers.
class IntervalLattice {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;

  // Breadth-first closure from singletons; throws BudgetExceeded when more
  // than `budget` intervals are generated.
  static IntervalLattice enumerate(PosetPtr poset,
                                   std::size_t budget = kDefaultBudget);

  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }

  // Index of an interval given by its member set; -1 if absent.
  int index_of(const Bitset& members) const;
  int index_of(const std::vector<int>& members) const;

  bool contains(int i, int j) const {
    return intervals_[i].bits.subset_of(intervals_[j].bits);
  }
  // Cov(I): minimal intervals strictly containing I, as lattice indices.
  const std::vector<int>& covers(int i) const { return covers_[i]; }

  // Least upper bound of the given intervals (indices); they must have a
  // common lower bound in the lattice.
  int join_index(const std::vector<int>& interval_indices) const;

 private:
  PosetPtr poset_;
  std::vector<Interval> intervals_;
  std::unordered_map<Bitset, int, BitsetHash> lookup_;
  std::vector<std::vector<int>> covers_;
};

}  // namespace intrep
