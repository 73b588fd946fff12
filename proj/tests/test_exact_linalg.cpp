#include "svcoh/exact_linalg.hpp"
#include "svcoh/h2_solver.hpp"

#include "oracle/dense_elimination.hpp"

#include <doctest.h>

#include <random>

using namespace svcoh;

namespace {

SparseVector vec(std::initializer_list<std::pair<std::size_t, long>> entries) {
  SparseVector v;
  for (auto [c, x] : entries) v.set(c, x);
  return v;
}

SparseMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 7), entry(-3, 3), coin(0, 2);
  const std::size_t rows = dim(rng), cols = dim(rng);
  SparseMatrix m(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    SparseVector r;
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) != 0) r.set(c, entry(rng));
    m.add_row(std::move(r));
  }
  return m;
}

}  // namespace

TEST_SUITE("exact-linalg") {

TEST_CASE("sparse vector arithmetic keeps no zeros") {
  auto a = vec({{0, 1}, {3, 2}});
  a.axpy(-2, vec({{3, 1}, {5, 4}}));
  CHECK(a == vec({{0, 1}, {5, -8}}));
  a.add(0, -1);
  CHECK(a.leading_col() == 5);
  a.scale(0);
  CHECK(a.empty());
  CHECK(dot(vec({{1, 2}, {4, 3}}), vec({{4, 5}, {9, 1}})) == 15);
}

TEST_CASE("matrix rejects out of range columns") {
  SparseMatrix m(2);
  CHECK_THROWS_AS(m.add_row(vec({{2, 1}})), std::out_of_range);
}

TEST_CASE("eliminate examples") {
  SparseMatrix id(2);
  id.add_row(vec({{0, 1}}));
  id.add_row(vec({{1, 1}}));
  auto e = eliminate(id);
  CHECK(e.rank == 2);
  CHECK(e.nullspace_basis.empty());

  SparseMatrix prop(2);
  prop.add_row(vec({{0, 1}, {1, 2}}));
  prop.add_row(vec({{0, 2}, {1, 4}}));
  e = eliminate(prop);
  CHECK(e.rank == 1);
  REQUIRE(e.nullspace_basis.size() == 1);
  CHECK(e.nullspace_basis[0] == vec({{0, -2}, {1, 1}}));
}

TEST_CASE("pivot rule: first column, then lowest row") {
  SparseMatrix m(3);
  m.add_row(vec({{1, 1}, {2, 1}}));
  m.add_row(vec({{0, 3}, {2, 1}}));
  m.add_row(vec({{0, 1}}));
  const auto e = eliminate(m);
  REQUIRE(e.pivots.size() == 3);
  CHECK(e.pivots[0] == Pivot{1, 0});
  CHECK(e.pivots[1] == Pivot{0, 1});
  CHECK(e.pivots[2] == Pivot{2, 2});
}

TEST_CASE("Virasoro rows at window 4: nullity 2 against the dense oracle") {
  const Params p(0, make_rational(1, 3));
  std::vector<BasisIndex> ls;
  for (int n = -4; n <= 4; ++n) ls.push_back(BasisIndex::L(n));
  const auto reg = degree_zero_pairs(ls, p);
  CHECK(reg.size() == 4);
  const auto sys = build_constraints(reg, ls, p);
  CHECK(eliminate(sys.matrix).nullspace_basis.size() == 2);
  CHECK(oracle::dense_nullity(sys.matrix) == 2);
}

TEST_CASE("rank") {
  CHECK(rank(SparseMatrix(4)) == 0);
  SparseMatrix id(5);
  for (std::size_t i = 0; i < 5; ++i) id.add_row(vec({{i, 1}}));
  CHECK(rank(id) == 5);
  SparseMatrix dup(3);
  for (int k = 0; k < 3; ++k) {
    dup.add_row(vec({{0, 1}, {2, -1}}));
    dup.add_row(vec({{1, 2}}));
  }
  CHECK(rank(dup) == 2);
}

TEST_CASE("in_span and quotient_dim") {
  const auto e1 = vec({{0, 1}}), e2 = vec({{1, 1}});
  CHECK(in_span(SparseVector{}, {e2}));
  CHECK(in_span(SparseVector{}, {}));
  CHECK_FALSE(in_span(e1, {e2}));
  CHECK(in_span(vec({{0, 2}, {1, -3}}), {e1, e2}));
  CHECK(quotient_dim({e1, e2}, {e1}) == 1);
  CHECK(quotient_dim({e1, e2}, {e1, e2}) == 0);
  CHECK_THROWS_AS(quotient_dim({e1}, {e2}), SubspaceNotContained);
}

TEST_CASE("property: sparse rank agrees with dense rank on random matrices") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_matrix(rng);
    const auto e = eliminate(m);
    REQUIRE(e.rank == oracle::dense_rank(oracle::to_dense(m)));
    REQUIRE(e.rank + e.nullspace_basis.size() == m.ncols());
    for (const auto& v : e.nullspace_basis) REQUIRE(m.apply(v).empty());
    REQUIRE(span_rank(e.nullspace_basis) == e.nullspace_basis.size());
    REQUIRE(eliminate(m) == e);
  }
}

}  // TEST_SUITE
