#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "intrep/errors.hpp"
#include "intrep/matrix.hpp"
#include "intrep/poset.hpp"

namespace intrep {

enum class Validation { kDiamonds, kFull };

// A persistence module over a finite poset: a dimension per element and an
// exact matrix per Hasse arrow, functorial for the full order relation.
// All pairwise structure maps are cached along a topological order at
// construction; instances are immutable afterwards.
template <class F>
class PersistenceModule {
 public:
  using Mat = Matrix<F>;
  using ArrowMaps = std::map<std::pair<int, int>, Mat>;

  PersistenceModule(PosetPtr poset, F field, std::vector<int> dims,
                    ArrowMaps arrow_maps,
                    Validation validation = Validation::kFull)
      : poset_(std::move(poset)), field_(std::move(field)), dims_(std::move(dims)) {
    const Poset& P = *poset_;
    if (static_cast<int>(dims_.size()) != P.size())
      throw ShapeMismatch("dimension vector does not cover the poset");
    for (int d : dims_)
      if (d < 0) throw ShapeMismatch("negative dimension");

    arrows_.resize(P.hasse().size());
    for (int a = 0; a < static_cast<int>(P.hasse().size()); ++a) {
      auto [x, y] = P.hasse()[a];
      auto it = arrow_maps.find({x, y});
      if (it == arrow_maps.end()) {
        // Maps with a zero-dimensional end are forced; anything else must
        // be supplied explicitly.
        if (dims_[x] != 0 && dims_[y] != 0)
          throw ShapeMismatch("missing map on Hasse arrow " + P.label(x) +
                              "->" + P.label(y));
        arrows_[a] = Mat(field_, dims_[y], dims_[x]);
      } else {
        if (it->second.rows() != dims_[y] || it->second.cols() != dims_[x])
          throw ShapeMismatch("map on " + P.label(x) + "->" + P.label(y) +
                              " has shape " + std::to_string(it->second.rows()) +
                              "x" + std::to_string(it->second.cols()) +
                              ", expected " + std::to_string(dims_[y]) + "x" +
                              std::to_string(dims_[x]));
        arrows_[a] = it->second;
      }
      arrow_index_[{x, y}] = a;
    }
    for (const auto& [key, unused] : arrow_maps)
      if (!arrow_index_.count(key))
        throw ShapeMismatch("map given on non-Hasse pair " +
                            P.label(key.first) + "->" + P.label(key.second));

    build_cache(validation);
  }

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  const F& field() const { return field_; }
  int dim(int x) const { return dims_[x]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
  }

  const Mat& arrow_map(int x, int y) const {
    auto it = arrow_index_.find({x, y});
    if (it == arrow_index_.end())
      throw NotComparable("no Hasse arrow " + poset_->label(x) + "->" +
                          poset_->label(y));
    return arrows_[it->second];
  }

  // The cached composite M_{y,x}; identity for x == y.
  const Mat& structure_map(int x, int y) const {
    if (!poset_->leq(x, y))
      throw NotComparable(poset_->label(x) + " is not below " +
                          poset_->label(y));
    return cache_[cache_key(x, y)];
  }

  const std::vector<int>& dimension_vector() const { return dims_; }

 private:
  std::size_t cache_key(int x, int y) const {
    return static_cast<std::size_t>(x) * poset_->size() + y;
  }

  void build_cache(Validation validation) {
    const Poset& P = *poset_;
    const int n = P.size();
    cache_.assign(static_cast<std::size_t>(n) * n, Mat());
    auto topo = P.topological_order();
    for (int x = 0; x < n; ++x) {
      cache_[cache_key(x, x)] = Mat::identity(field_, dims_[x]);
      for (int y : topo) {
        if (y == x || !P.leq(x, y)) continue;
        bool first = true;
        int first_via = -1;
        for (int z : P.hasse_down(y)) {
          if (!P.leq(x, z)) continue;
          Mat composite = arrow_map(z, y) * cache_[cache_key(x, z)];
          if (first) {
            cache_[cache_key(x, y)] = std::move(composite);
            first = false;
            first_via = z;
          } else if (validation == Validation::kFull &&
                     !(composite == cache_[cache_key(x, y)])) {
            throw CommutativityViolation(
                "paths " + P.label(x) + "~>" + P.label(first_via) + "->" +
                P.label(y) + " and " + P.label(x) + "~>" + P.label(z) + "->" +
                P.label(y) + " disagree");
          }
        }
      }
    }
    if (validation == Validation::kDiamonds) {
      for (int x = 0; x < n; ++x) {
        const auto& ups = P.hasse_up(x);
        for (std::size_t i = 0; i < ups.size(); ++i)
          for (std::size_t j = i + 1; j < ups.size(); ++j)
            for (int y : P.hasse_up(ups[i])) {
              const auto& up2 = P.hasse_up(ups[j]);
              if (std::find(up2.begin(), up2.end(), y) == up2.end()) continue;
              Mat lhs = arrow_map(ups[i], y) * arrow_map(x, ups[i]);
              Mat rhs = arrow_map(ups[j], y) * arrow_map(x, ups[j]);
              if (!(lhs == rhs))
                throw CommutativityViolation(
                    "diamond " + P.label(x) + "->" + P.label(ups[i]) + "->" +
                    P.label(y) + " vs " + P.label(x) + "->" + P.label(ups[j]) +
                    "->" + P.label(y) + " disagrees");
            }
      }
    }
  }

  PosetPtr poset_;
  F field_;
  std::vector<int> dims_;
  std::vector<Mat> arrows_;
  std::map<std::pair<int, int>, int> arrow_index_;
  std::vector<Mat> cache_;
};

template <class F>
PersistenceModule<F> zero_module(PosetPtr P, F field) {
  std::vector<int> dims(P->size(), 0);
  return PersistenceModule<F>(std::move(P), std::move(field), std::move(dims),
                              {});
}

// Dimension 1 on I with identity maps, 0 elsewhere.
template <class F>
PersistenceModule<F> interval_module(PosetPtr P, const Interval& I, F field) {
  std::vector<int> dims(P->size(), 0);
  for (int x : I.members) dims[x] = 1;
  typename PersistenceModule<F>::ArrowMaps maps;
  for (auto [x, y] : P->hasse())
    if (I.bits.test(x) && I.bits.test(y))
      maps.emplace(std::pair{x, y}, Matrix<F>::identity(field, 1));
  return PersistenceModule<F>(P, field, std::move(dims), std::move(maps));
}

template <class F>
PersistenceModule<F> direct_sum(const PersistenceModule<F>& M,
                                const PersistenceModule<F>& N) {
  if (!(M.field() == N.field())) throw FieldMismatch("direct sum over different fields");
  if (M.poset_ptr().get() != N.poset_ptr().get())
    throw PosetMismatch("direct sum over different posets");
  const Poset& P = M.poset();
  std::vector<int> dims(P.size());
  for (int x = 0; x < P.size(); ++x) dims[x] = M.dim(x) + N.dim(x);
  typename PersistenceModule<F>::ArrowMaps maps;
  for (auto [x, y] : P.hasse()) {
    BlockLayout layout{{M.dim(y), N.dim(y)}, {M.dim(x), N.dim(x)}};
    std::map<std::pair<int, int>, Matrix<F>> blocks;
    blocks.emplace(std::pair{0, 0}, M.arrow_map(x, y));
    blocks.emplace(std::pair{1, 1}, N.arrow_map(x, y));
    maps.emplace(std::pair{x, y}, block_assemble(M.field(), layout, blocks));
  }
  return PersistenceModule<F>(M.poset_ptr(), M.field(), std::move(dims),
                              std::move(maps));
}

// Pullback along an order-preserving map into M's poset.
template <class F>
PersistenceModule<F> restrict_along(const PersistenceModule<F>& M,
                                    const PosetMap& f) {
  if (f.target.get() != M.poset_ptr().get())
    throw PosetMismatch("map does not land in the module's poset");
  const Poset& S = *f.source;
  std::vector<int> dims(S.size());
  for (int z = 0; z < S.size(); ++z) dims[z] = M.dim(f(z));
  typename PersistenceModule<F>::ArrowMaps maps;
  for (auto [x, y] : S.hasse())
    maps.emplace(std::pair{x, y}, M.structure_map(f(x), f(y)));
  return PersistenceModule<F>(f.source, M.field(), std::move(dims),
                              std::move(maps));
}

namespace detail {

// Random invertible matrix together with its exact inverse, built from
// elementary row additions and swaps (determinant +-1).
template <class F>
std::pair<Matrix<F>, Matrix<F>> random_invertible(const F& field, int n,
                                                  std::mt19937_64& rng) {
  Matrix<F> Q = Matrix<F>::identity(field, n);
  Matrix<F> Qinv = Q;
  if (n <= 1) return {Q, Qinv};
  std::uniform_int_distribution<int> pick(0, n - 1), coeff(-2, 2);
  for (int step = 0; step < 2 * n; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int c = coeff(rng);
    if (c == 0) c = 1;
    auto fc = field.from_int(c);
    // Q <- E Q, Qinv <- Qinv E^{-1} keeps Q * Qinv = I.
    for (int k = 0; k < n; ++k)
      Q.at(j, k) = field.add(Q.at(j, k), field.mul(fc, Q.at(i, k)));
    for (int k = 0; k < n; ++k)
      Qinv.at(k, i) = field.sub(Qinv.at(k, i), field.mul(fc, Qinv.at(k, j)));
  }
  return {Q, Qinv};
}

}  // namespace detail

// Conjugates M by a random invertible base change at every vertex. The
// result is isomorphic to M, so every invariant must be unchanged.
template <class F>
PersistenceModule<F> random_base_change(const PersistenceModule<F>& M,
                                        std::uint64_t seed) {
  const Poset& P = M.poset();
  std::mt19937_64 rng(seed);
  std::vector<Matrix<F>> Q, Qinv;
  for (int x = 0; x < P.size(); ++x) {
    auto [q, qi] = detail::random_invertible(M.field(), M.dim(x), rng);
    Q.push_back(std::move(q));
    Qinv.push_back(std::move(qi));
  }
  typename PersistenceModule<F>::ArrowMaps maps;
  for (auto [x, y] : P.hasse())
    maps.emplace(std::pair{x, y}, Q[y] * M.arrow_map(x, y) * Qinv[x]);
  return PersistenceModule<F>(M.poset_ptr(), M.field(), M.dims(),
                              std::move(maps));
}

// Direct sum of interval modules with random multiplicities <= bound,
// returned together with the chosen multiplicity function on the lattice.
template <class F>
std::pair<PersistenceModule<F>, std::vector<int>> random_interval_decomposable(
    const IntervalLattice& lattice, F field, int multiplicity_bound,
    std::uint64_t seed, bool base_change = false) {
  const PosetPtr& P = lattice.poset_ptr();
  std::mt19937_64 rng(seed);
  const int N = static_cast<int>(lattice.size());
  std::vector<int> mult(N, 0);
  if (multiplicity_bound > 0 && N > 0) {
    // Sparse support keeps the dimensions small.
    std::uniform_int_distribution<int> idx(0, N - 1);
    std::uniform_int_distribution<int> count(1, multiplicity_bound);
    int supports = std::uniform_int_distribution<int>(0, std::min(N, 4))(rng);
    for (int s = 0; s < supports; ++s) mult[idx(rng)] = count(rng);
  }

  std::vector<int> dims(P->size(), 0);
  for (int j = 0; j < N; ++j)
    if (mult[j] > 0)
      for (int x : lattice[j].members) dims[x] += mult[j];

  // Per element, the slots of each interval copy in canonical order.
  std::vector<std::vector<std::pair<int, int>>> slots(P->size());
  for (int j = 0; j < N; ++j)
    for (int c = 0; c < mult[j]; ++c)
      for (int x : lattice[j].members) slots[x].push_back({j, c});

  typename PersistenceModule<F>::ArrowMaps maps;
  for (auto [x, y] : P->hasse()) {
    Matrix<F> m(field, dims[y], dims[x]);
    for (int col = 0; col < dims[x]; ++col) {
      auto id = slots[x][col];
      for (int row = 0; row < dims[y]; ++row)
        if (slots[y][row] == id) m.at(row, col) = field.one();
    }
    maps.emplace(std::pair{x, y}, std::move(m));
  }
  PersistenceModule<F> M(P, field, std::move(dims), std::move(maps));
  if (base_change) {
    std::uint64_t s2 = rng();
    return {random_base_change(M, s2), std::move(mult)};
  }
  return {std::move(M), std::move(mult)};
}

}  // namespace intrep
