#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "intrep/invariants.hpp"
#include "intrep/poset.hpp"

namespace intrep {

// Integer-valued function on the interval lattice, indexed canonically.
struct SignedInvariant {
  std::string system;
  std::vector<int> values;
};

// The signed barcode: positive and negative interval multisets. Supports
// are disjoint by construction.
struct Replacement {
  std::string system;
  std::vector<int> positive;  // max(delta, 0) per interval
  std::vector<int> negative;  // max(-delta, 0) per interval
};

// Moebius value of the lattice segment [I_i, I_j]: the signed count of
// cover subsets of I_i joining to I_j, with the empty join read as I_i.
// Throws NotContained when I_i is not contained in I_j; BudgetExceeded
// when |Cov(I_i)| exceeds the subset cap.
int mobius_value(const IntervalLattice& lattice, int i, int j,
                 std::size_t cover_cap = 20);

// delta(I) = c(I) - sum of delta over strict supersets, computed from
// maximal intervals downward.
SignedInvariant signed_multiplicity(const InvariantTable& table,
                                    const IntervalLattice& lattice);

// The direct inclusion-exclusion over cover subsets; same values as the
// inductive recursion, kept as an independent route for cross-checks.
SignedInvariant signed_multiplicity_subset_formula(
    const InvariantTable& table, const IntervalLattice& lattice,
    std::size_t cover_cap = 20);

Replacement split_signed(const SignedInvariant& delta);

template <class F>
Replacement interval_replacement(const PersistenceModule<F>& M,
                                 const CompressionSystem& system,
                                 const IntervalLattice& lattice,
                                 int jobs = 1) {
  InvariantTable table = invariant_table(M, system, lattice, jobs);
  return split_signed(signed_multiplicity(table, lattice));
}

// Invariants of the signed barcode itself: its multiplicity at I is the
// sum of delta over intervals containing I, its dimension vector the
// delta-weighted sum of indicators, and its segment ranks the same
// up-sum restricted to segments.
struct ReplacementInvariants {
  std::vector<int> multiplicities;           // by lattice index
  std::vector<int> dimension_vector;         // by poset element
  std::map<std::pair<int, int>, int> segment_ranks;  // by (source, sink)
};

ReplacementInvariants replacement_invariants(const SignedInvariant& delta,
                                             const IntervalLattice& lattice);

inline SignedInvariant signed_of(const Replacement& r) {
  SignedInvariant s;
  s.system = r.system;
  s.values.resize(r.positive.size());
  for (std::size_t i = 0; i < r.positive.size(); ++i)
    s.values[i] = r.positive[i] - r.negative[i];
  return s;
}

}  // namespace intrep
