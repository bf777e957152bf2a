#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "intrep/compression.hpp"
#include "intrep/module.hpp"
#include "intrep/parallel.hpp"
#include "intrep/poset.hpp"

namespace intrep {

// One row (resp. column) of the multiplicity formula: a pair of sources
// (resp. sinks) together with one witness, a minimal element of the
// intersection of their up-sets (resp. maximal element for down-sets).
struct JoinWitness {
  int lo;    // index into the source (resp. sink) list of the compressed poset
  int hi;    // lo < hi
  int elem;  // element of the compressed poset

  friend bool operator==(const JoinWitness&, const JoinWitness&) = default;
};

struct ExtremalJoins {
  std::vector<JoinWitness> source_joins;  // lexicographic in (lo, hi, elem)
  std::vector<JoinWitness> sink_meets;
};

// Witness lists of a connected compressed poset; empty on a side with a
// single extremal point.
ExtremalJoins extremal_joins(const Poset& Q);

// Drops a witness row {i,k} whenever some other source a_j lies below its
// join (dually for meets), per the degenerate-row reduction. Requires
// single witnesses per pair on the pruned side; a side that does not
// satisfy this is returned untouched. The multiplicity value is unchanged.
ExtremalJoins redundancy_prune(const Poset& Q, const ExtremalJoins& joins);

// Lexicographically least (source index, sink index) pair comparable in Q.
std::pair<int, int> comparable_pair(const Poset& Q);

template <class F>
struct MultiplicityMatrices {
  Matrix<F> source_part;  // rows: source-join witnesses, columns: sources
  Matrix<F> sink_part;    // rows: sinks, columns: sink-meet witnesses
  Matrix<F> corner;       // rows: sinks, columns: sources; one nonzero block
};

// Assembles the three blocks of the multiplicity formula from structure
// maps of M pulled through the compression map. `pairing` indexes the
// comparable (source, sink) pair carried by the corner block.
template <class F>
MultiplicityMatrices<F> multiplicity_matrices(const PersistenceModule<F>& M,
                                              const CompressionDatum& datum,
                                              std::pair<int, int> pairing,
                                              const ExtremalJoins& joins) {
  const Poset& Q = *datum.compressed;
  const F& field = M.field();
  std::vector<int> sources, sinks;
  for (int z = 0; z < Q.size(); ++z) {
    bool minimal = Q.hasse_down(z).empty();
    bool maximal = Q.hasse_up(z).empty();
    if (minimal) sources.push_back(z);
    if (maximal) sinks.push_back(z);
  }
  const int n = static_cast<int>(sources.size());
  const int m = static_cast<int>(sinks.size());
  auto dim_at = [&](int q) { return M.dim(datum.map(q)); };

  BlockLayout src_layout;
  for (const auto& w : joins.source_joins)
    src_layout.row_sizes.push_back(dim_at(w.elem));
  for (int a : sources) src_layout.col_sizes.push_back(dim_at(a));
  std::map<std::pair<int, int>, Matrix<F>> src_blocks;
  for (int r = 0; r < static_cast<int>(joins.source_joins.size()); ++r) {
    const auto& w = joins.source_joins[r];
    const Matrix<F>& lo_map =
        M.structure_map(datum.map(sources[w.lo]), datum.map(w.elem));
    const Matrix<F>& hi_map =
        M.structure_map(datum.map(sources[w.hi]), datum.map(w.elem));
    src_blocks.emplace(std::pair{r, w.lo}, lo_map);
    src_blocks.emplace(std::pair{r, w.hi}, hi_map.negate());
  }
  Matrix<F> source_part = block_assemble(field, src_layout, src_blocks);

  BlockLayout snk_layout;
  for (int b : sinks) snk_layout.row_sizes.push_back(dim_at(b));
  for (const auto& w : joins.sink_meets)
    snk_layout.col_sizes.push_back(dim_at(w.elem));
  std::map<std::pair<int, int>, Matrix<F>> snk_blocks;
  for (int c = 0; c < static_cast<int>(joins.sink_meets.size()); ++c) {
    const auto& w = joins.sink_meets[c];
    const Matrix<F>& lo_map =
        M.structure_map(datum.map(w.elem), datum.map(sinks[w.lo]));
    const Matrix<F>& hi_map =
        M.structure_map(datum.map(w.elem), datum.map(sinks[w.hi]));
    snk_blocks.emplace(std::pair{w.lo, c}, lo_map);
    snk_blocks.emplace(std::pair{w.hi, c}, hi_map.negate());
  }
  Matrix<F> sink_part = block_assemble(field, snk_layout, snk_blocks);

  auto [i0, j0] = pairing;
  if (i0 < 0 || i0 >= n || j0 < 0 || j0 >= m ||
      !Q.leq(sources[i0], sinks[j0]))
    throw NoComparablePair("pairing does not name a comparable source/sink");
  BlockLayout corner_layout{snk_layout.row_sizes, src_layout.col_sizes};
  std::map<std::pair<int, int>, Matrix<F>> corner_blocks;
  corner_blocks.emplace(
      std::pair{j0, i0},
      M.structure_map(datum.map(sources[i0]), datum.map(sinks[j0])));
  Matrix<F> corner = block_assemble(field, corner_layout, corner_blocks);

  return MultiplicityMatrices<F>{std::move(source_part), std::move(sink_part),
                                 std::move(corner)};
}

// rank [[S, 0], [corner, K]] - rank S - rank K. With the empty-matrix
// convention this single expression covers the (1,1), (n,1), (1,m) and
// (n,m) cases at once.
template <class F>
int multiplicity_from_matrices(const MultiplicityMatrices<F>& mm) {
  const F& field = mm.corner.field();
  BlockLayout layout{{mm.source_part.rows(), mm.sink_part.rows()},
                     {mm.source_part.cols(), mm.sink_part.cols()}};
  std::map<std::pair<int, int>, Matrix<F>> blocks;
  blocks.emplace(std::pair{0, 0}, mm.source_part);
  blocks.emplace(std::pair{1, 0}, mm.corner);
  blocks.emplace(std::pair{1, 1}, mm.sink_part);
  Matrix<F> big = block_assemble(field, layout, blocks);
  return rank(big) - rank(mm.source_part) - rank(mm.sink_part);
}

template <class F>
int compression_multiplicity(const PersistenceModule<F>& M,
                             const CompressionDatum& datum) {
  const Poset& Q = *datum.compressed;
  ExtremalJoins joins = extremal_joins(Q);
  auto pairing = comparable_pair(Q);
  auto mm = multiplicity_matrices(M, datum, pairing, joins);
  return multiplicity_from_matrices(mm);
}

template <class F>
int compression_multiplicity(const PersistenceModule<F>& M,
                             const CompressionSystem& system,
                             const Interval& I) {
  return compression_multiplicity(M, system.compress(M.poset_ptr(), I));
}

// The multiplicity at every interval of the lattice, in canonical order.
struct InvariantTable {
  std::string system;
  std::vector<int> values;
};

template <class F>
InvariantTable invariant_table(const PersistenceModule<F>& M,
                               const CompressionSystem& system,
                               const IntervalLattice& lattice, int jobs = 1) {
  InvariantTable table;
  table.system = system.name();
  table.values.assign(lattice.size(), 0);
  parallel_for(static_cast<int>(lattice.size()), jobs, [&](int i) {
    table.values[i] = compression_multiplicity(
        M, system.compress(lattice.poset_ptr(), lattice[i]));
  });
  return table;
}

// The 2D-grid shortcut for the total system: only consecutive source
// joins and sink meets enter the formula.
template <class F>
int reduced_grid_multiplicity(const PersistenceModule<F>& M,
                              const Interval& I) {
  const Poset& P = M.poset();
  if (!P.is_grid() || P.grid_sizes().size() != 2)
    throw NotAGrid("the reduced formula applies to 2D-grids only");
  const F& field = M.field();
  const auto& sc = I.sources;
  const auto& sk = I.sinks;
  const int n = static_cast<int>(sc.size());
  const int m = static_cast<int>(sk.size());

  auto coords = [&](int x) { return P.grid_coords(x); };
  auto point = [&](int cx, int cy) {
    return P.index_of("(" + std::to_string(cx) + "," + std::to_string(cy) +
                      ")");
  };

  BlockLayout src_layout, snk_layout;
  std::map<std::pair<int, int>, Matrix<F>> src_blocks, snk_blocks;
  std::vector<int> joins, meets;
  for (int i = 0; i + 1 < n; ++i) {
    int j = point(std::max(coords(sc[i])[0], coords(sc[i + 1])[0]),
                  std::max(coords(sc[i])[1], coords(sc[i + 1])[1]));
    joins.push_back(j);
    src_layout.row_sizes.push_back(M.dim(j));
  }
  for (int a : sc) src_layout.col_sizes.push_back(M.dim(a));
  for (int i = 0; i + 1 < n; ++i) {
    src_blocks.emplace(std::pair{i, i}, M.structure_map(sc[i], joins[i]));
    src_blocks.emplace(std::pair{i, i + 1},
                       M.structure_map(sc[i + 1], joins[i]).negate());
  }
  for (int b : sk) snk_layout.row_sizes.push_back(M.dim(b));
  for (int j = 0; j + 1 < m; ++j) {
    int w = point(std::min(coords(sk[j])[0], coords(sk[j + 1])[0]),
                  std::min(coords(sk[j])[1], coords(sk[j + 1])[1]));
    meets.push_back(w);
    snk_layout.col_sizes.push_back(M.dim(w));
  }
  for (int j = 0; j + 1 < m; ++j) {
    snk_blocks.emplace(std::pair{j, j}, M.structure_map(meets[j], sk[j]));
    snk_blocks.emplace(std::pair{j + 1, j},
                       M.structure_map(meets[j], sk[j + 1]).negate());
  }
  MultiplicityMatrices<F> mm{
      block_assemble(field, src_layout, src_blocks),
      block_assemble(field, snk_layout, snk_blocks),
      Matrix<F>(field, 0, 0)};
  BlockLayout corner_layout{snk_layout.row_sizes, src_layout.col_sizes};
  std::map<std::pair<int, int>, Matrix<F>> corner_blocks;
  corner_blocks.emplace(std::pair{0, 0}, M.structure_map(sc[0], sk[0]));
  mm.corner = block_assemble(field, corner_layout, corner_blocks);
  return multiplicity_from_matrices(mm);
}

// rank of the canonical map from lim to colim of M restricted to I,
// computed through a basepoint (the canonical-least member; the value is
// independent of the choice since I is connected). This is the
// independent oracle for the total-system multiplicity.
template <class F>
int generalized_rank(const PersistenceModule<F>& M, const Interval& I) {
  const Poset& P = M.poset();
  const F& field = M.field();
  const auto& members = I.members;
  const int k = static_cast<int>(members.size());
  std::vector<int> pos(P.size(), -1);
  for (int i = 0; i < k; ++i) pos[members[i]] = i;

  std::vector<std::pair<int, int>> arrows;  // member positions (i, j)
  for (auto [x, y] : P.hasse())
    if (I.bits.test(x) && I.bits.test(y))
      arrows.push_back({pos[x], pos[y]});

  BlockLayout dom;  // one column block per member
  for (int i = 0; i < k; ++i) dom.col_sizes.push_back(M.dim(members[i]));

  // lim: families (v_x) with M_{y,x} v_x = v_y along every arrow.
  BlockLayout lim_layout{{}, dom.col_sizes};
  std::map<std::pair<int, int>, Matrix<F>> lim_blocks;
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
    auto [i, j] = arrows[a];
    lim_layout.row_sizes.push_back(M.dim(members[j]));
    lim_blocks.emplace(std::pair{a, i},
                       M.structure_map(members[i], members[j]));
    lim_blocks.emplace(std::pair{a, j},
                       Matrix<F>::identity(field, M.dim(members[j])).negate());
  }
  Matrix<F> constraints = block_assemble(field, lim_layout, lim_blocks);
  Matrix<F> lim_basis = kernel_basis(constraints);

  // colim: quotient of the direct sum by differences along arrows.
  BlockLayout diff_layout{dom.col_sizes, {}};
  std::map<std::pair<int, int>, Matrix<F>> diff_blocks;
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
    auto [i, j] = arrows[a];
    diff_layout.col_sizes.push_back(M.dim(members[i]));
    diff_blocks.emplace(std::pair{i, a},
                        Matrix<F>::identity(field, M.dim(members[i])));
    diff_blocks.emplace(std::pair{j, a},
                        M.structure_map(members[i], members[j]).negate());
  }
  Matrix<F> differences = block_assemble(field, diff_layout, diff_blocks);
  Matrix<F> colim_proj = cokernel_projection(differences);

  // Theta = (colim projection at x0) . (lim basis rows at x0).
  const int base = 0;  // members are sorted; members[0] is canonical-least
  const int d0 = M.dim(members[base]);
  const int off = dom.col_offset(base);
  Matrix<F> theta(field, colim_proj.rows(), lim_basis.cols());
  for (int r = 0; r < colim_proj.rows(); ++r)
    for (int c = 0; c < lim_basis.cols(); ++c) {
      auto acc = field.zero();
      for (int t = 0; t < d0; ++t)
        acc = field.add(acc, field.mul(colim_proj.at(r, off + t),
                                       lim_basis.at(off + t, c)));
      theta.at(r, c) = acc;
    }
  return rank(theta);
}

}  // namespace intrep
