#include "doctest.h"

#include <random>

#include "psigma/errors.hpp"
#include "psigma/group_action.hpp"
#include "psigma/presentation_oracle.hpp"

using namespace psigma;
using namespace psigma::oracle;

TEST_CASE("wedge sorting signs")
{
  std::vector<Generator> f{{1, 0}, {0, 1}};
  CHECK(sort_wedge(f) == -1);
  CHECK(f == std::vector<Generator>{{0, 1}, {1, 0}});
  std::vector<Generator> g{{2, 0}, {0, 2}, {1, 0}};
  CHECK(sort_wedge(g) == 1);
  std::vector<Generator> rep{{0, 1}, {1, 2}, {0, 1}};
  CHECK(sort_wedge(rep) == 0);
}

TEST_CASE("relation matrix shape")
{
  auto r = build_relation_matrix(3, 2);
  CHECK(r.triangle_relations == 6);
  CHECK(r.square_relations == 3);
  CHECK(r.columns.size() == 15);
  for (auto const &row : r.matrix.data())
    for (auto const &[c, v] : row)
      CHECK((v == 1 || v == -1));

  // the (1,2) square relation is the first row: one entry at {(0,1),(1,0)}
  auto col = r.columns.column_of(Monomial{{0, 1}, {1, 0}});
  REQUIRE(col.has_value());
  CHECK(r.matrix.row(0) == SparseRow{{*col, Rational(1)}});

  CHECK(build_relation_matrix(4, 3).columns.size() == 220);
  CHECK_THROWS_AS(build_relation_matrix(3, 1), ArgumentError);
  CHECK_THROWS_AS(build_relation_matrix(6, 2), ResourceLimitError);
  CHECK_THROWS_AS(build_relation_matrix(4, 4), ResourceLimitError);
  Limits wide;
  wide.oracle_max_n = 6;
  CHECK_NOTHROW(build_relation_matrix(6, 2, wide));
}

TEST_CASE("quotient ranks")
{
  CHECK(quotient_rank(3, 1) == 6);
  CHECK(quotient_rank(3, 2) == 9);
  CHECK(quotient_rank(5, 3) == 500);
  auto report = quotient_rank_report(4, 3);
  CHECK(report.relations.modular_agreed);
  CHECK(report.quotient == 64);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k)
      CHECK(BigInt(static_cast<unsigned long>(quotient_rank(n, k))) == forest_count(n, k));
}

TEST_CASE("forest monomials form a basis")
{
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 2; ++k)
      CHECK(verify_forest_basis(n, k));
  for (int n = 2; n <= 4; ++n)
    CHECK(PresentedAlgebra(n, std::min(3, n)).forests_complement_relations());
}

TEST_CASE("cyclic monomials vanish")
{
  PresentedAlgebra a2(3, 2);
  CHECK(reduces_to_zero(a2, {{0, 1}, {1, 0}}));
  CHECK_FALSE(reduces_to_zero(a2, {{0, 1}, {1, 2}}));
  // two edges out of the same vertex are not a forest but do not vanish
  CHECK_FALSE(reduces_to_zero(a2, {{0, 1}, {0, 2}}));
  PresentedAlgebra a3(3, 3);
  CHECK(reduces_to_zero(a3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(reduces_to_zero(a3, {{0, 2}, {2, 1}, {1, 0}}));
  PresentedAlgebra b3(4, 3);
  CHECK(reduces_to_zero(b3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(reduces_to_zero(b3, {{0, 1}, {1, 0}, {2, 3}}));
  CHECK_FALSE(reduces_to_zero(b3, {{0, 1}, {1, 2}, {2, 3}}));
}

TEST_CASE("generator words reproduce the element")
{
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 6;
    auto g = SignedPermutation::random(n, rng);
    auto word = generator_word(g);
    auto built = SignedPermutation::identity(n);
    for (int f : word.flips)
      built = SignedPermutation::flip(n, f) * built;
    for (int t : word.transpositions)
      built = SignedPermutation::adjacent(n, t) * built;
    CHECK(built == g);
  }
}

TEST_CASE("the oracle action matches act")
{
  PresentedAlgebra a(3, 2);
  auto f = RootedForest::from_edges(3, {{0, 1}, {1, 2}});
  auto w = to_wedge(f);
  CHECK(oracle_action(a, SignedPermutation::identity(3), w) == NormalForm{{f, Rational(1)}});
  // vertex 1 is a second index exactly once
  CHECK(oracle_action(a, SignedPermutation::flip(3, 1), w) == NormalForm{{f, Rational(-1)}});

  std::mt19937_64 rng(99);
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 2 && k < n; ++k) {
      PresentedAlgebra alg(n, k);
      auto basis = enumerate_forests(n, k);
      for (int trial = 0; trial < 60; ++trial) {
        auto g = SignedPermutation::random(n, rng);
        auto const &f = basis[static_cast<std::size_t>(trial) % basis.size()];
        auto image = act(g, f);
        CHECK(oracle_action(alg, g, to_wedge(f)) ==
              NormalForm{{image.forest, Rational(image.coeff)}});
      }
    }
}

TEST_CASE("normal forms satisfy the triangle relation")
{
  PresentedAlgebra a(3, 2);
  // a_{2,1} ^ a_{1,0} - a_{2,1} ^ a_{2,0} + a_{0,1} ^ a_{2,0} = 0; the middle
  // term is the only non-forest monomial.
  NormalForm sum = a.normal_form(std::vector<Generator>{{2, 1}, {1, 0}});
  for (auto const &[f, v] : a.normal_form(std::vector<Generator>{{2, 1}, {2, 0}}))
    sum[f] -= v;
  for (auto const &[f, v] : a.normal_form(std::vector<Generator>{{0, 1}, {2, 0}}))
    sum[f] += v;
  std::erase_if(sum, [](auto const &kv) { return kv.second == 0; });
  CHECK(sum.empty());
  CHECK(a.normal_form(std::vector<Generator>{{2, 1}, {2, 0}}).size() == 2);
}
