#include <doctest.h>

#include <random>

#include "intrep/invariants.hpp"
#include "intrep/io.hpp"
#include "testutil.hpp"

using namespace intrep;
using QF = RationalField;
using QMod = PersistenceModule<QF>;

namespace {

QMod fixture(const std::string& name) {
  return std::get<QMod>(load_module_json(fixture_json(name), std::nullopt));
}

}  // namespace

TEST_CASE("extremal_joins") {
  SUBCASE("2-chain: both sides empty") {
    auto C = Poset::grid({2});
    auto j = extremal_joins(C);
    CHECK(j.source_joins.empty());
    CHECK(j.sink_meets.empty());
  }

  SUBCASE("P1 as its own compression: brute-force witnesses") {
    auto P = testutil::p1();
    auto j = extremal_joins(*P);
    // Sources 1, 4; up(1) cap up(4) = {2, 3}, both minimal there.
    REQUIRE(j.source_joins.size() == 2);
    CHECK(j.source_joins[0] == JoinWitness{0, 1, P->index_of("2")});
    CHECK(j.source_joins[1] == JoinWitness{0, 1, P->index_of("3")});
    // Sinks 2, 3; down(2) cap down(3) = {1, 4}, both maximal there.
    REQUIRE(j.sink_meets.size() == 2);
    CHECK(j.sink_meets[0] == JoinWitness{0, 1, P->index_of("1")});
    CHECK(j.sink_meets[1] == JoinWitness{0, 1, P->index_of("4")});
  }

  SUBCASE("zz poset with two sources has the unique join point") {
    auto G = std::make_shared<const Poset>(Poset::grid({3, 2}));
    auto L = IntervalLattice::enumerate(G);
    std::vector<int> members{G->index_of("(1,2)"), G->index_of("(2,1)"),
                             G->index_of("(2,2)"), G->index_of("(3,1)"),
                             G->index_of("(3,2)")};
    auto d = CompressionSystem::zigzag().compress(G, L[L.index_of(members)]);
    auto j = extremal_joins(*d.compressed);
    REQUIRE(j.source_joins.size() == 1);
    CHECK(d.compressed->label(j.source_joins[0].elem) == "(2,2)");
  }
}

TEST_CASE("multiplicity_matrices") {
  auto P = testutil::p1();
  auto L = IntervalLattice::enumerate(P);
  auto tot = CompressionSystem::total();
  auto M = testutil::m_theta(P, 2);

  SUBCASE("(1,1)-type collapses to the corner") {
    int seg = L.index_of(std::vector<int>{P->index_of("1"), P->index_of("2")});
    auto d = tot.compress(P, L[seg]);
    auto mm = multiplicity_matrices(M, d, comparable_pair(*d.compressed),
                                    extremal_joins(*d.compressed));
    CHECK(mm.source_part.rows() == 0);
    CHECK(mm.sink_part.cols() == 0);
    CHECK(mm.corner.rows() == 1);
    CHECK(mm.corner.cols() == 1);
    CHECK(mm.corner.at(0, 0) == M.field().one());
  }

  SUBCASE("P1 full interval: assembled by hand") {
    int full = L.index_of(std::vector<int>{0, 1, 2, 3});
    auto d = tot.compress(P, L[full]);
    auto mm = multiplicity_matrices(M, d, comparable_pair(*d.compressed),
                                    extremal_joins(*d.compressed));
    QF q;
    // Rows: witnesses 2 then 3; columns: sources 1 then 4.
    auto expect = Matrix<QF>::from_int_rows(q, 2, 2, {{1, -2}, {1, -1}});
    CHECK(mm.source_part == expect);
    auto expect_sink = Matrix<QF>::from_int_rows(q, 2, 2, {{1, 2}, {-1, -1}});
    CHECK(mm.sink_part == expect_sink);
    auto expect_corner = Matrix<QF>::from_int_rows(q, 2, 2, {{1, 0}, {0, 0}});
    CHECK(mm.corner == expect_corner);
  }

  SUBCASE("V_I gives +-identity blocks") {
    int full = L.index_of(std::vector<int>{0, 1, 2, 3});
    auto V = interval_module(P, L[full], QF{});
    auto d = tot.compress(P, L[full]);
    auto mm = multiplicity_matrices(V, d, comparable_pair(*d.compressed),
                                    extremal_joins(*d.compressed));
    QF q;
    for (int r = 0; r < mm.source_part.rows(); ++r) {
      int nonzero = 0;
      for (int c = 0; c < mm.source_part.cols(); ++c) {
        const auto& e = mm.source_part.at(r, c);
        if (!q.is_zero(e)) {
          ++nonzero;
          CHECK((q.eq(e, q.one()) || q.eq(e, q.neg(q.one()))));
        }
      }
      CHECK(nonzero == 2);
    }
  }
}

TEST_CASE("compression_multiplicity reproduces Table 1") {
  auto P = testutil::p1();
  auto L = IntervalLattice::enumerate(P);
  auto tot = CompressionSystem::total();
  for (long theta : {2L, 3L}) {
    auto M = testutil::m_theta(P, theta);
    for (std::size_t i = 0; i < L.size(); ++i) {
      int expected = L[i].members.size() == 4 ? 0 : 1;
      CHECK(compression_multiplicity(M, tot, L[i]) == expected);
    }
  }
}

TEST_CASE("multiplicity of interval modules is containment (all systems)") {
  std::vector<std::pair<PosetPtr, std::vector<CompressionSystem>>> cases;
  cases.push_back({testutil::p1(),
                   {CompressionSystem::total(), CompressionSystem::source_sink()}});
  cases.push_back({std::make_shared<const Poset>(Poset::grid({3, 2})),
                   {CompressionSystem::total(), CompressionSystem::source_sink(),
                    CompressionSystem::zigzag()}});
  QF q;
  for (auto& [P, systems] : cases) {
    auto L = IntervalLattice::enumerate(P);
    for (const auto& sys : systems)
      for (std::size_t jj = 0; jj < L.size(); ++jj) {
        auto V = interval_module(P, L[jj], q);
        for (std::size_t ii = 0; ii < L.size(); ++ii) {
          int expected =
              L.contains(static_cast<int>(ii), static_cast<int>(jj)) ? 1 : 0;
          CHECK(compression_multiplicity(V, sys, L[ii]) == expected);
        }
      }
  }
}

TEST_CASE("D4 examples") {
  auto M1 = fixture("d4-m1");
  auto M2 = fixture("d4-m2");
  auto MC = fixture("d4-center");
  auto tot = CompressionSystem::total();

  auto full_value = [&](const QMod& M) {
    auto L = IntervalLattice::enumerate(M.poset_ptr());
    std::vector<int> all(M.poset().size());
    for (int i = 0; i < M.poset().size(); ++i) all[i] = i;
    return compression_multiplicity(M, tot, L[L.index_of(all)]);
  };
  CHECK(full_value(M1) == 1);
  CHECK(full_value(M2) == 0);
  CHECK(full_value(MC) == 1);
}

TEST_CASE("invariant_table") {
  auto P = testutil::p1();
  auto L = IntervalLattice::enumerate(P);
  auto tot = CompressionSystem::total();
  QF q;

  SUBCASE("Table 1 middle column, parallel workers agree") {
    auto M = testutil::m_theta(P, 2);
    auto t1 = invariant_table(M, tot, L, 1);
    auto t4 = invariant_table(M, tot, L, 4);
    CHECK(t1.values == t4.values);
    for (std::size_t i = 0; i < L.size(); ++i)
      CHECK(t1.values[i] == (L[i].members.size() == 4 ? 0 : 1));
  }

  SUBCASE("zero module") {
    auto t = invariant_table(zero_module(P, q), tot, L);
    for (int v : t.values) CHECK(v == 0);
  }

  SUBCASE("interval-decomposable: table is the up-sum of multiplicities") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
      auto [M, m] = random_interval_decomposable(L, q, 3, rng());
      for (const auto& sys :
           {CompressionSystem::total(), CompressionSystem::source_sink()}) {
        auto t = invariant_table(M, sys, L);
        for (std::size_t i = 0; i < L.size(); ++i) {
          int expected = 0;
          for (std::size_t j = 0; j < L.size(); ++j)
            if (L.contains(static_cast<int>(i), static_cast<int>(j)))
              expected += m[j];
          CHECK(t.values[i] == expected);
        }
      }
    }
  }
}

TEST_CASE("reduced_grid_multiplicity") {
  auto M = fixture("g52-lambda2");
  auto G = M.poset_ptr();
  auto L = IntervalLattice::enumerate(G);
  auto tot = CompressionSystem::total();

  SUBCASE("segments give the structure-map rank") {
    for (std::size_t i = 0; i < L.size(); ++i) {
      const Interval& I = L[i];
      if (I.sources.size() != 1 || I.sinks.size() != 1) continue;
      CHECK(reduced_grid_multiplicity(M, I) ==
            rank(M.structure_map(I.sources[0], I.sinks[0])));
    }
  }

  SUBCASE("agrees with the general formula everywhere") {
    for (std::size_t i = 0; i < L.size(); ++i)
      CHECK(reduced_grid_multiplicity(M, L[i]) ==
            compression_multiplicity(M, tot, L[i]));
  }

  SUBCASE("interval modules give one") {
    QF q;
    for (std::size_t i = 0; i < L.size(); i += 7)
      CHECK(reduced_grid_multiplicity(interval_module(G, L[i], q), L[i]) == 1);
  }

  SUBCASE("rejects non-grids") {
    auto P = testutil::p1();
    auto M2 = testutil::m_theta(P, 2);
    auto LP = IntervalLattice::enumerate(P);
    CHECK_THROWS_AS(reduced_grid_multiplicity(M2, LP[0]), NotAGrid);
  }
}

TEST_CASE("redundancy_prune") {
  SUBCASE("grid intervals keep only consecutive pairs") {
    auto G = std::make_shared<const Poset>(Poset::grid({4, 4}));
    auto tot = CompressionSystem::total();
    auto L = IntervalLattice::enumerate(G);

    std::mt19937_64 rng(29);
    auto M = testutil::random_module(G, QF{}, rng, 3, 3);
    int staircases = 0;
    for (std::size_t i = 0; i < L.size(); ++i) {
      const Interval& I = L[i];
      if (I.sources.size() < 3 && I.sinks.size() < 3) continue;
      ++staircases;
      auto d = tot.compress(G, I);
      auto joins = extremal_joins(*d.compressed);
      auto pruned = redundancy_prune(*d.compressed, joins);
      CHECK(pruned.source_joins.size() == I.sources.size() - 1);
      CHECK(pruned.sink_meets.size() == I.sinks.size() - 1);
      for (const auto& w : pruned.source_joins) CHECK(w.hi == w.lo + 1);
      for (const auto& w : pruned.sink_meets) CHECK(w.hi == w.lo + 1);

      auto pairing = comparable_pair(*d.compressed);
      auto full = multiplicity_matrices(M, d, pairing, joins);
      auto slim = multiplicity_matrices(M, d, pairing, pruned);
      CHECK(multiplicity_from_matrices(full) ==
            multiplicity_from_matrices(slim));
      if (staircases > 25) break;
    }
    CHECK(staircases > 0);
  }

  SUBCASE("no relations among joins: identity") {
    auto P = testutil::p1();
    auto joins = extremal_joins(*P);
    auto pruned = redundancy_prune(*P, joins);
    CHECK(pruned.source_joins == joins.source_joins);
    CHECK(pruned.sink_meets == joins.sink_meets);
  }

  SUBCASE("pruned and unpruned values agree on random grid modules") {
    auto G = std::make_shared<const Poset>(Poset::grid({3, 3}));
    auto L = IntervalLattice::enumerate(G);
    auto tot = CompressionSystem::total();
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
      auto M = testutil::random_module(G, QF{}, rng, 3, 3);
      for (std::size_t i = 0; i < L.size(); i += 3) {
        auto d = tot.compress(G, L[i]);
        auto joins = extremal_joins(*d.compressed);
        auto pruned = redundancy_prune(*d.compressed, joins);
        auto pairing = comparable_pair(*d.compressed);
        CHECK(multiplicity_from_matrices(
                  multiplicity_matrices(M, d, pairing, joins)) ==
              multiplicity_from_matrices(
                  multiplicity_matrices(M, d, pairing, pruned)));
      }
    }
  }
}

TEST_CASE("generalized_rank") {
  QF q;
  SUBCASE("V_I over I is one") {
    auto P = testutil::p1();
    auto L = IntervalLattice::enumerate(P);
    for (std::size_t i = 0; i < L.size(); ++i)
      CHECK(generalized_rank(interval_module(P, L[i], q), L[i]) == 1);
  }

  SUBCASE("D4 modules") {
    auto M1 = fixture("d4-m1");
    auto M2 = fixture("d4-m2");
    auto L = IntervalLattice::enumerate(M1.poset_ptr());
    std::vector<int> all{0, 1, 2, 3};
    int full = L.index_of(all);
    CHECK(generalized_rank(M1, L[full]) == 1);
    CHECK(generalized_rank(M2, L[full]) == 0);
  }

  SUBCASE("equals the tot multiplicity on random modules") {
    std::mt19937_64 rng(41);
    auto tot = CompressionSystem::total();
    for (int trial = 0; trial < 25; ++trial) {
      auto P = testutil::random_poset(rng, 6);
      auto L = IntervalLattice::enumerate(P);
      auto M = testutil::random_module(P, q, rng);
      for (std::size_t i = 0; i < L.size(); ++i)
        CHECK(compression_multiplicity(M, tot, L[i]) ==
              generalized_rank(M, L[i]));
    }
  }
}

TEST_CASE("axiom laws") {
  QF q;
  std::mt19937_64 rng(43);
  auto tot = CompressionSystem::total();
  auto ss = CompressionSystem::source_sink();

  SUBCASE("additivity") {
    for (int trial = 0; trial < 8; ++trial) {
      auto P = testutil::random_poset(rng, 5);
      auto L = IntervalLattice::enumerate(P);
      auto M = testutil::random_module(P, q, rng);
      auto N = testutil::random_module(P, q, rng);
      auto MN = direct_sum(M, N);
      for (const auto& sys : {tot, ss})
        for (std::size_t i = 0; i < L.size(); ++i)
          CHECK(compression_multiplicity(MN, sys, L[i]) ==
                compression_multiplicity(M, sys, L[i]) +
                    compression_multiplicity(N, sys, L[i]));
    }
  }

  SUBCASE("segment law for rank systems") {
    auto G = std::make_shared<const Poset>(Poset::grid({3, 2}));
    auto L = IntervalLattice::enumerate(G);
    auto zz = CompressionSystem::zigzag();
    for (int trial = 0; trial < 5; ++trial) {
      auto M = testutil::random_module(G, q, rng);
      for (std::size_t i = 0; i < L.size(); ++i) {
        const Interval& I = L[i];
        if (I.sources.size() != 1 || I.sinks.size() != 1) continue;
        int expected = rank(M.structure_map(I.sources[0], I.sinks[0]));
        for (const auto& sys : {tot, ss, zz})
          CHECK(compression_multiplicity(M, sys, I) == expected);
      }
    }
  }

  SUBCASE("tot monotonicity and the floor law") {
    for (int trial = 0; trial < 8; ++trial) {
      auto P = testutil::random_poset(rng, 5);
      auto L = IntervalLattice::enumerate(P);
      auto M = testutil::random_module(P, q, rng);
      auto ttot = invariant_table(M, tot, L);
      auto tss = invariant_table(M, ss, L);
      for (std::size_t i = 0; i < L.size(); ++i) {
        CHECK(tss.values[i] >= ttot.values[i]);  // Prop. floor
        for (std::size_t j = 0; j < L.size(); ++j)
          if (L.contains(static_cast<int>(i), static_cast<int>(j)))
            CHECK(ttot.values[i] >= ttot.values[j]);  // monotone decrease
      }
    }
  }

  SUBCASE("zz equals tot on 2D-grids") {
    auto zz = CompressionSystem::zigzag();
    for (auto sizes : {std::vector<int>{3, 2}, std::vector<int>{2, 3}}) {
      auto G = std::make_shared<const Poset>(Poset::grid(sizes));
      auto L = IntervalLattice::enumerate(G);
      for (int trial = 0; trial < 5; ++trial) {
        auto M = testutil::random_module(G, q, rng);
        auto a = invariant_table(M, tot, L);
        auto b = invariant_table(M, zz, L);
        CHECK(a.values == b.values);
      }
    }
  }

  SUBCASE("base-change invariance") {
    for (int trial = 0; trial < 5; ++trial) {
      auto P = testutil::random_poset(rng, 5);
      auto L = IntervalLattice::enumerate(P);
      auto M = testutil::random_module(P, q, rng);
      auto N = random_base_change(M, rng());
      for (const auto& sys : {tot, ss})
        CHECK(invariant_table(M, sys, L).values ==
              invariant_table(N, sys, L).values);
    }
  }

  SUBCASE("pairing invariance of the (n,m) formula") {
    for (int trial = 0; trial < 6; ++trial) {
      auto P = testutil::random_poset(rng, 6);
      auto L = IntervalLattice::enumerate(P);
      auto M = testutil::random_module(P, q, rng);
      for (std::size_t i = 0; i < L.size(); ++i) {
        auto d = tot.compress(P, L[i]);
        const Poset& Q = *d.compressed;
        auto joins = extremal_joins(Q);
        int reference = -1;
        for (std::size_t a = 0; a < L[i].sources.size(); ++a)
          for (std::size_t b = 0; b < L[i].sinks.size(); ++b) {
            // Pairing indices refer to extremes of the compressed poset,
            // which for tot list members in the same canonical order.
            int qa = -1, qb = -1;
            for (int z = 0; z < Q.size(); ++z) {
              if (d.map(z) == L[i].sources[a]) qa = z;
              if (d.map(z) == L[i].sinks[b]) qb = z;
            }
            if (!Q.leq(qa, qb)) continue;
            auto [sc, sk] = sources_sinks(Q, [&] {
              std::vector<int> all(Q.size());
              for (int z = 0; z < Q.size(); ++z) all[z] = z;
              return all;
            }());
            int ia = -1, ib = -1;
            for (std::size_t t = 0; t < sc.size(); ++t)
              if (sc[t] == qa) ia = static_cast<int>(t);
            for (std::size_t t = 0; t < sk.size(); ++t)
              if (sk[t] == qb) ib = static_cast<int>(t);
            auto mm = multiplicity_matrices(M, d, {ia, ib}, joins);
            int value = multiplicity_from_matrices(mm);
            if (reference < 0) reference = value;
            CHECK(value == reference);
          }
      }
    }
  }

  SUBCASE("zero tot multiplicity on a segment forces a zero structure map") {
    for (int trial = 0; trial < 8; ++trial) {
      auto P = testutil::random_poset(rng, 5);
      auto L = IntervalLattice::enumerate(P);
      auto M = testutil::random_module(P, q, rng);
      for (std::size_t i = 0; i < L.size(); ++i) {
        const Interval& I = L[i];
        if (I.sources.size() != 1 || I.sinks.size() != 1) continue;
        if (generalized_rank(M, I) == 0)
          CHECK(rank(M.structure_map(I.sources[0], I.sinks[0])) == 0);
      }
    }
  }
}
