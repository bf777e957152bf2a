#pragma once

// Shared builders and independent oracles for the test suites. Everything
// here stays out of the library on purpose: brute-force enumerations and
// generators double-check the production code paths.

#include <random>
#include <vector>

#include "intrep/invariants.hpp"
#include "intrep/io.hpp"
#include "intrep/module.hpp"
#include "intrep/poset.hpp"

namespace testutil {

using namespace intrep;

inline PosetPtr p1() {
  return std::make_shared<const Poset>(Poset::from_relations(
      {"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"4", "2"}, {"4", "3"}}));
}

// M(theta) over P1: four one-dimensional spaces, theta on the 4->2 arrow.
inline PersistenceModule<RationalField> m_theta(const PosetPtr& P, long theta) {
  RationalField f;
  PersistenceModule<RationalField>::ArrowMaps maps;
  auto one = Matrix<RationalField>::identity(f, 1);
  auto th = Matrix<RationalField>(f, 1, 1);
  th.at(0, 0) = f.from_int(theta);
  maps.emplace(std::pair{P->index_of("1"), P->index_of("2")}, one);
  maps.emplace(std::pair{P->index_of("1"), P->index_of("3")}, one);
  maps.emplace(std::pair{P->index_of("4"), P->index_of("2")}, th);
  maps.emplace(std::pair{P->index_of("4"), P->index_of("3")}, one);
  return PersistenceModule<RationalField>(P, f, {1, 1, 1, 1}, std::move(maps));
}

// All 2^n subsets filtered by interval_check; the independent enumeration
// oracle for small posets.
inline std::vector<std::vector<int>> brute_force_intervals(const Poset& P) {
  std::vector<std::vector<int>> out;
  const int n = P.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> xs;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) xs.push_back(i);
    if (interval_check(P, xs)) out.push_back(xs);
  }
  return out;
}

inline PosetPtr random_poset(std::mt19937_64& rng, int max_elems = 7) {
  std::uniform_int_distribution<int> size_dist(1, max_elems);
  const int n = size_dist(rng);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rels;
  std::bernoulli_distribution edge(0.35);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) rels.push_back({labels[i], labels[j]});
  return std::make_shared<const Poset>(Poset::from_relations(labels, rels));
}

// Solves pi * X = I for a full-row-rank pi.
template <class F>
Matrix<F> right_inverse(const Matrix<F>& pi) {
  const F& f = pi.field();
  const int d = pi.rows(), w = pi.cols();
  Matrix<F> aug(f, d, w + d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < w; ++j) aug.at(i, j) = pi.at(i, j);
    aug.at(i, w + i) = f.one();
  }
  auto pivots = intrep::detail::rref(aug);
  Matrix<F> X(f, w, d);
  for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
    for (int k = 0; k < d; ++k) X.at(pivots[r], k) = aug.at(r, w + k);
  return X;
}

// A random persistence module as the cokernel of a random map between
// projective modules. Valid by construction (the constructor re-checks),
// and not interval-decomposable in general. Dimensions stay at most
// max_gens.
template <class F>
PersistenceModule<F> random_module(const PosetPtr& P, F field,
                                   std::mt19937_64& rng, int max_gens = 3,
                                   int max_rels = 3) {
  const Poset& Po = *P;
  const int n = Po.size();
  std::uniform_int_distribution<int> vertex(0, n - 1);
  const int g = std::uniform_int_distribution<int>(1, max_gens)(rng);
  const int r = std::uniform_int_distribution<int>(0, max_rels)(rng);
  std::vector<int> gen(g), rel(r);
  for (int& x : gen) x = vertex(rng);
  for (int& y : rel) y = vertex(rng);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::vector<std::vector<int>> a(g, std::vector<int>(r, 0));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < r; ++j)
      if (Po.leq(gen[i], rel[j])) a[i][j] = coeff(rng);

  // Per element: present generators/relations, the presentation map, and
  // the chosen cokernel coordinates with a section.
  std::vector<std::vector<int>> gens_at(n);
  std::vector<Matrix<F>> proj(n), sect(n);
  std::vector<int> dims(n);
  for (int z = 0; z < n; ++z) {
    std::vector<int> gi, rj;
    for (int i = 0; i < g; ++i)
      if (Po.leq(gen[i], z)) gi.push_back(i);
    for (int j = 0; j < r; ++j)
      if (Po.leq(rel[j], z)) rj.push_back(j);
    Matrix<F> fz(field, static_cast<int>(gi.size()), static_cast<int>(rj.size()));
    for (std::size_t ii = 0; ii < gi.size(); ++ii)
      for (std::size_t jj = 0; jj < rj.size(); ++jj)
        fz.at(static_cast<int>(ii), static_cast<int>(jj)) =
            field.from_int(a[gi[ii]][rj[jj]]);
    proj[z] = cokernel_projection(fz);
    sect[z] = right_inverse(proj[z]);
    dims[z] = proj[z].rows();
    gens_at[z] = std::move(gi);
  }

  typename PersistenceModule<F>::ArrowMaps maps;
  for (auto [z, zp] : Po.hasse()) {
    // Inclusion pattern of generator slots from z into z'.
    Matrix<F> incl(field, static_cast<int>(gens_at[zp].size()),
                   static_cast<int>(gens_at[z].size()));
    for (std::size_t c = 0; c < gens_at[z].size(); ++c)
      for (std::size_t rr = 0; rr < gens_at[zp].size(); ++rr)
        if (gens_at[zp][rr] == gens_at[z][c])
          incl.at(static_cast<int>(rr), static_cast<int>(c)) = field.one();
    maps.emplace(std::pair{z, zp}, proj[zp] * incl * sect[z]);
  }
  return PersistenceModule<F>(P, field, std::move(dims), std::move(maps));
}

}  // namespace testutil
