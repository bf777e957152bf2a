#include "intrep/replacement.hpp"

namespace intrep {

namespace {

// Visits every subset of Cov(I), reporting (join index, parity).
template <class Fn>
void for_each_cover_subset(const IntervalLattice& lattice, int i,
                           std::size_t cover_cap, Fn&& fn) {
  const auto& cov = lattice.covers(i);
  if (cov.size() > cover_cap)
    throw BudgetExceeded("cover set of size " + std::to_string(cov.size()) +
                         " exceeds the subset cap of " +
                         std::to_string(cover_cap));
  const std::size_t total = std::size_t{1} << cov.size();
  std::vector<int> picked;
  for (std::size_t mask = 0; mask < total; ++mask) {
    picked.clear();
    for (std::size_t b = 0; b < cov.size(); ++b)
      if (mask & (std::size_t{1} << b)) picked.push_back(cov[b]);
    int join = picked.empty() ? i : lattice.join_index(picked);
    fn(join, picked.size() % 2 == 0 ? 1 : -1);
  }
}

}  // namespace

int mobius_value(const IntervalLattice& lattice, int i, int j,
                 std::size_t cover_cap) {
  if (!lattice.contains(i, j))
    throw NotContained("first interval is not contained in the second");
  int total = 0;
  for_each_cover_subset(lattice, i, cover_cap, [&](int join, int sign) {
    if (join == j) total += sign;
  });
  return total;
}

SignedInvariant signed_multiplicity(const InvariantTable& table,
                                    const IntervalLattice& lattice) {
  const int N = static_cast<int>(lattice.size());
  SignedInvariant delta;
  delta.system = table.system;
  delta.values.assign(N, 0);
  // Canonical order sorts by cardinality, so strict supersets always come
  // later; walking backwards resolves all dependencies.
  for (int i = N - 1; i >= 0; --i) {
    int v = table.values[i];
    for (int j = i + 1; j < N; ++j)
      if (lattice.contains(i, j)) v -= delta.values[j];
    delta.values[i] = v;
  }
  return delta;
}

SignedInvariant signed_multiplicity_subset_formula(
    const InvariantTable& table, const IntervalLattice& lattice,
    std::size_t cover_cap) {
  const int N = static_cast<int>(lattice.size());
  SignedInvariant delta;
  delta.system = table.system;
  delta.values.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    int v = 0;
    for_each_cover_subset(lattice, i, cover_cap,
                          [&](int join, int sign) { v += sign * table.values[join]; });
    delta.values[i] = v;
  }
  return delta;
}

Replacement split_signed(const SignedInvariant& delta) {
  Replacement r;
  r.system = delta.system;
  r.positive.assign(delta.values.size(), 0);
  r.negative.assign(delta.values.size(), 0);
  for (std::size_t i = 0; i < delta.values.size(); ++i) {
    if (delta.values[i] > 0) r.positive[i] = delta.values[i];
    if (delta.values[i] < 0) r.negative[i] = -delta.values[i];
  }
  return r;
}

ReplacementInvariants replacement_invariants(const SignedInvariant& delta,
                                             const IntervalLattice& lattice) {
  const int N = static_cast<int>(lattice.size());
  ReplacementInvariants out;
  out.multiplicities.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    int v = 0;
    for (int j = 0; j < N; ++j)
      if (lattice.contains(i, j)) v += delta.values[j];
    out.multiplicities[i] = v;
  }
  out.dimension_vector.assign(lattice.poset().size(), 0);
  for (int j = 0; j < N; ++j) {
    if (delta.values[j] == 0) continue;
    for (int x : lattice[j].members) out.dimension_vector[x] += delta.values[j];
  }
  for (int i = 0; i < N; ++i) {
    const Interval& I = lattice[i];
    if (I.sources.size() == 1 && I.sinks.size() == 1)
      out.segment_ranks[{I.sources[0], I.sinks[0]}] = out.multiplicities[i];
  }
  return out;
}

}  // namespace intrep
