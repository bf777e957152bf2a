#include "intrep/poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace intrep {

namespace {

std::string coord_label(const std::vector<int>& c) {
  if (c.size() == 1) return std::to_string(c[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

int Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownLabel("unknown element label: " + label);
  return it->second;
}

void Poset::finish_construction() {
  const int n = size();
  down_.assign(n, Bitset(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (up_[x].test(y)) down_[y].set(x);

  hasse_.clear();
  hasse_up_.assign(n, {});
  hasse_down_.assign(n, {});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !up_[x].test(y)) continue;
      Bitset between = up_[x] & down_[y];
      if (between.count() == 2) {
        hasse_.emplace_back(x, y);
        hasse_up_[x].push_back(y);
        hasse_down_[y].push_back(x);
      }
    }
}

Poset Poset::from_relations(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  Poset P;
  P.labels_ = elements;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    if (!P.index_.emplace(elements[i], i).second)
      throw ParseError("duplicate element label: " + elements[i]);
  }
  const int n = P.size();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : relations) {
    adj[P.index_of(a)].push_back(P.index_of(b));
  }
  P.up_.assign(n, Bitset(n));
  for (int x = 0; x < n; ++x) {
    // DFS reachability gives the reflexive-transitive closure.
    std::vector<int> stack{x};
    P.up_[x].set(x);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!P.up_[x].test(w)) {
          P.up_[x].set(w);
          stack.push_back(w);
        }
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (P.up_[x].test(y) && P.up_[y].test(x))
        throw CycleError("antisymmetry violated between " + elements[x] +
                         " and " + elements[y]);
  P.finish_construction();
  return P;
}

Poset Poset::grid(const std::vector<int>& sizes) {
  for (int s : sizes)
    if (s < 1) throw InvalidSize("grid sizes must be >= 1");
  if (sizes.empty()) throw InvalidSize("grid needs at least one dimension");

  Poset P;
  P.grid_sizes_ = sizes;
  const int d = static_cast<int>(sizes.size());
  std::vector<int> cur(d, 1);
  for (;;) {
    P.coords_.push_back(cur);
    P.labels_.push_back(coord_label(cur));
    int k = d - 1;
    while (k >= 0 && cur[k] == sizes[k]) cur[k--] = 1;
    if (k < 0) break;
    ++cur[k];
  }
  const int n = static_cast<int>(P.labels_.size());
  for (int i = 0; i < n; ++i) P.index_.emplace(P.labels_[i], i);
  P.up_.assign(n, Bitset(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool le = true;
      for (int k = 0; k < d && le; ++k) le = P.coords_[x][k] <= P.coords_[y][k];
      if (le) P.up_[x].set(y);
    }
  P.finish_construction();
  return P;
}

std::vector<int> Poset::topological_order() const {
  const int n = size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
    return down_[a].count() < down_[b].count();
  });
  return order;
}

Poset Poset::induced(const std::vector<int>& members) const {
  Poset Q;
  Q.labels_.reserve(members.size());
  for (int m : members) Q.labels_.push_back(labels_[m]);
  for (int i = 0; i < static_cast<int>(members.size()); ++i)
    Q.index_.emplace(Q.labels_[i], i);
  const int n = static_cast<int>(members.size());
  Q.up_.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(members[i], members[j])) Q.up_[i].set(j);
  Q.finish_construction();
  return Q;
}

PosetMap PosetMap::make(PosetPtr source, PosetPtr target,
                        std::vector<int> vertex_map) {
  if (static_cast<int>(vertex_map.size()) != source->size())
    throw Error("vertex map does not cover the source poset");
  for (int x = 0; x < source->size(); ++x)
    for (int y = 0; y < source->size(); ++y)
      if (source->leq(x, y) && !target->leq(vertex_map[x], vertex_map[y]))
        throw Error("map is not order-preserving at (" + source->label(x) +
                    ", " + source->label(y) + ")");
  return PosetMap{std::move(source), std::move(target), std::move(vertex_map)};
}

PosetMap PosetMap::identity(PosetPtr poset) {
  std::vector<int> id(poset->size());
  std::iota(id.begin(), id.end(), 0);
  return PosetMap{poset, poset, std::move(id)};
}

PosetMap PosetMap::compose(const PosetMap& g, const PosetMap& f) {
  if (f.target.get() != g.source.get())
    throw PosetMismatch("composition of maps over different posets");
  std::vector<int> vm(f.vertex_map.size());
  for (std::size_t i = 0; i < vm.size(); ++i) vm[i] = g.vertex_map[f.vertex_map[i]];
  return PosetMap{f.source, g.target, std::move(vm)};
}

std::vector<int> convex_hull(const Poset& P, const std::vector<int>& xs) {
  if (xs.empty()) throw EmptyInput("convex hull of an empty subset");
  Bitset hull(P.size());
  for (int a : xs)
    for (int b : xs)
      if (P.leq(a, b)) hull |= P.up_set(a) & P.down_set(b);
  return hull.to_indices();
}

bool interval_check(const Poset& P, const Bitset& xs) {
  auto members = xs.to_indices();
  if (members.empty()) return false;
  // Convexity: every segment between members stays inside.
  for (int a : members)
    for (int b : members)
      if (P.leq(a, b) && !(P.up_set(a) & P.down_set(b)).subset_of(xs))
        return false;
  // Connectivity through zigzags of comparable members.
  Bitset seen(P.size());
  std::vector<int> stack{members[0]};
  seen.set(members[0]);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : members)
      if (!seen.test(w) && (P.leq(v, w) || P.leq(w, v))) {
        seen.set(w);
        stack.push_back(w);
      }
  }
  for (int w : members)
    if (!seen.test(w)) return false;
  return true;
}

bool interval_check(const Poset& P, const std::vector<int>& xs) {
  return interval_check(P, Bitset::from_indices(P.size(), xs));
}

std::pair<std::vector<int>, std::vector<int>> sources_sinks(
    const Poset& P, const std::vector<int>& members) {
  std::vector<int> sources, sinks;
  for (int x : members) {
    bool minimal = true, maximal = true;
    for (int y : members) {
      if (y != x && P.leq(y, x)) minimal = false;
      if (y != x && P.leq(x, y)) maximal = false;
    }
    if (minimal) sources.push_back(x);
    if (maximal) sinks.push_back(x);
  }
  return {sources, sinks};
}

Interval make_interval(const Poset& P, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!interval_check(P, members))
    throw NotConnected("subset is not an interval");
  auto [sources, sinks] = sources_sinks(P, members);
  Bitset bits = Bitset::from_indices(P.size(), members);
  return Interval{std::move(members), std::move(sources), std::move(sinks),
                  std::move(bits)};
}

Interval join_intervals(const Poset& P, const std::vector<Interval>& parts) {
  if (parts.empty()) throw EmptyInput("join of an empty interval set");
  std::vector<int> all;
  for (const auto& I : parts)
    all.insert(all.end(), I.members.begin(), I.members.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  auto hull = convex_hull(P, all);
  if (!interval_check(P, hull))
    throw NotConnected("hull of the union is not an interval");
  return make_interval(P, hull);
}

IntervalLattice IntervalLattice::enumerate(PosetPtr poset,
                                           std::size_t budget) {
  const Poset& P = *poset;
  IntervalLattice L;
  L.poset_ = poset;

  std::unordered_map<Bitset, int, BitsetHash> seen;
  std::vector<Interval> found;
  std::deque<int> queue;

  auto push = [&](std::vector<int> members) {
    Bitset bits = Bitset::from_indices(P.size(), members);
    if (seen.count(bits)) return;
    if (found.size() >= budget)
      throw BudgetExceeded("interval budget of " + std::to_string(budget) +
                           " exceeded");
    seen.emplace(bits, static_cast<int>(found.size()));
    queue.push_back(static_cast<int>(found.size()));
    found.push_back(make_interval(P, std::move(members)));
  };

  for (int x = 0; x < P.size(); ++x) push({x});
  while (!queue.empty()) {
    // Copy: `found` may reallocate while we grow from this interval.
    const Interval I = found[queue.front()];
    queue.pop_front();
    for (int x : I.members) {
      for (int nb : P.hasse_up(x))
        if (!I.bits.test(nb)) {
          auto grown = I.members;
          grown.push_back(nb);
          auto hull = convex_hull(P, grown);
          if (interval_check(P, hull)) push(hull);
        }
      for (int nb : P.hasse_down(x))
        if (!I.bits.test(nb)) {
          auto grown = I.members;
          grown.push_back(nb);
          auto hull = convex_hull(P, grown);
          if (interval_check(P, hull)) push(hull);
        }
    }
  }

  std::sort(found.begin(), found.end(), [](const Interval& a, const Interval& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  L.intervals_ = std::move(found);
  L.lookup_.clear();
  for (int i = 0; i < static_cast<int>(L.intervals_.size()); ++i)
    L.lookup_.emplace(L.intervals_[i].bits, i);

  // Covers by transitive reduction of containment: scanning supersets in
  // cardinality order, a superset is a cover iff it contains no previously
  // found cover.
  const int N = static_cast<int>(L.intervals_.size());
  L.covers_.assign(N, {});
  for (int i = 0; i < N; ++i) {
    auto& cov = L.covers_[i];
    for (int j = i + 1; j < N; ++j) {
      if (!L.contains(i, j) || i == j) continue;
      if (L.intervals_[j].members.size() == L.intervals_[i].members.size())
        continue;
      bool minimal = true;
      for (int c : cov)
        if (L.contains(c, j)) {
          minimal = false;
          break;
        }
      if (minimal) cov.push_back(j);
    }
  }
  return L;
}

int IntervalLattice::index_of(const Bitset& members) const {
  auto it = lookup_.find(members);
  return it == lookup_.end() ? -1 : it->second;
}

int IntervalLattice::index_of(const std::vector<int>& members) const {
  return index_of(Bitset::from_indices(poset_->size(), members));
}

int IntervalLattice::join_index(const std::vector<int>& interval_indices) const {
  std::vector<Interval> parts;
  parts.reserve(interval_indices.size());
  for (int i : interval_indices) parts.push_back(intervals_[i]);
  Interval j = join_intervals(*poset_, parts);
  int idx = index_of(j.bits);
  if (idx < 0) throw NotConnected("join does not exist in the lattice");
  return idx;
}

}  // namespace intrep
