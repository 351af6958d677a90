#include "doctest.h"

#include <random>

#include "psigma/errors.hpp"
#include "psigma/group_action.hpp"

using namespace psigma;

namespace {

RootedForest random_forest(int n, int k, std::mt19937_64 &rng)
{
  auto all = enumerate_forests(n, k);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

} // namespace

TEST_CASE("action: identity, flips and transpositions")
{
  auto f = RootedForest::from_edges(4, {{0, 1}, {2, 1}, {3, 2}});
  CHECK(act(SignedPermutation::identity(4), f) == SignedBasisVector{f, 1});
  // vertex 1 has two children, vertex 2 one
  CHECK(act(SignedPermutation::flip(4, 1), f).coeff == 1);
  CHECK(act(SignedPermutation::flip(4, 2), f).coeff == -1);
  CHECK(act(SignedPermutation::flip(4, 0), f).coeff == 1);
  // swapping the two children of 1 moves 3's parent
  auto swapped = act(SignedPermutation::transposition(4, 0, 2), f);
  CHECK(swapped.forest == RootedForest::from_edges(4, {{0, 1}, {2, 1}, {3, 0}}));
  CHECK(swapped.coeff == -1);
}

TEST_CASE("action respects composition and inverses")
{
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= std::min(3, n - 1); ++k) {
      auto basis = enumerate_forests(n, k);
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      for (int trial = 0; trial < 1000; ++trial) {
        auto g = SignedPermutation::random(n, rng);
        auto h = SignedPermutation::random(n, rng);
        auto const &f = basis[pick(rng)];
        auto hf = act(h, f);
        auto ghf = act(g, hf.forest);
        auto direct = act(g * h, f);
        CHECK(direct.forest == ghf.forest);
        CHECK(direct.coeff == hf.coeff * ghf.coeff);
        auto back = act(g.inverse(), act(g, f).forest);
        CHECK(back.forest == f);
        CHECK(back.coeff * act(g, f).coeff == 1);
      }
    }
}

TEST_CASE("fixed coefficient matches the action")
{
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 2 + trial % 5;
    int k = 1 + trial % (n - 1);
    auto f = random_forest(n, k, rng);
    auto g = SignedPermutation::random(n, rng);
    auto image = act(g, f);
    int expected = image.forest == f ? image.coeff : 0;
    CHECK(fixed_coefficient(g, f.parents()) == expected);
  }
}

TEST_CASE("orbit traces agree with the full scan")
{
  for (int n = 1; n <= 7; ++n)
    for (auto const &d : enumerate_double_partitions(n)) {
      auto g = class_representative(d);
      for (int k = 0; k < n; ++k)
        CHECK(trace(g, k, TraceMethod::orbit) == trace(g, k, TraceMethod::full_scan));
    }
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 6;
    auto g = SignedPermutation::random(n, rng);
    int k = trial % n;
    CHECK(trace(g, k, TraceMethod::orbit) == trace(g, k, TraceMethod::full_scan));
  }
}

TEST_CASE("trace at the identity is the dimension")
{
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k < n; ++k)
      CHECK(BigInt(static_cast<long>(trace(SignedPermutation::identity(n), k))) ==
            forest_count(n, k));
  CHECK(trace(SignedPermutation::identity(3), 3) == 0);
}

TEST_CASE("the character is a class function")
{
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 6; ++n) {
    ConjClassTable classes(GroupKind::hyperoctahedral, n);
    for (auto const &c : classes.classes())
      for (int trial = 0; trial < 20; ++trial) {
        auto h = SignedPermutation::random(n, rng);
        auto conj = h * c.representative * h.inverse();
        for (int k = 1; k <= 2; ++k)
          CHECK(trace(conj, k) == trace(c.representative, k));
      }
  }
}

TEST_CASE("negating involutions")
{
  auto path = RootedForest::from_edges(3, {{0, 1}, {1, 2}});
  auto w = find_negating_involution(path);
  CHECK(act(w, path) == SignedBasisVector{path, -1});

  // all out-degrees even: vertex 0 with children 1 and 2
  auto cherry = RootedForest::from_edges(3, {{1, 0}, {2, 0}});
  auto t = find_negating_involution(cherry);
  CHECK(t.unsigned_perm());
  CHECK(act(t, cherry).coeff == -1);

  CHECK_THROWS_AS(find_negating_involution(RootedForest::isolated(3)), ArgumentError);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (auto const &f : enumerate_forests(n, k))
        CHECK_NOTHROW(find_negating_involution(f));
}

TEST_CASE("trivial multiplicities")
{
  for (int n = 2; n <= 6; ++n) {
    CHECK(trivial_multiplicity(n, 0, GroupKind::hyperoctahedral) == 1);
    CHECK(trivial_multiplicity(n, 1, GroupKind::hyperoctahedral) == 0);
    CHECK(trivial_multiplicity(n, 1, GroupKind::symmetric) == 1);
  }
  CHECK(trivial_multiplicity(5, 3, GroupKind::symmetric) == 3);
  CHECK(trivial_multiplicity(3, 2, GroupKind::symmetric) == 1);
}

TEST_CASE("symmetrized vectors are invariant")
{
  auto f = RootedForest::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});
  auto v = symmetrize(f);
  CHECK_FALSE(v.empty());
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(act(SignedPermutation::random_unsigned(5, rng), v) == v);

  // a cherry is negated by swapping its leaves, so it symmetrizes to zero
  CHECK(symmetrize(RootedForest::from_edges(4, {{1, 0}, {2, 0}})).empty());
}
