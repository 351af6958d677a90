#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "psigma/class_table.hpp"
#include "psigma/errors.hpp"
#include "psigma/signed_permutation.hpp"

using namespace psigma;

namespace {

// Image of the signed point s * (x + 1), returned in the same encoding.
int apply(SignedPermutation const &g, int point)
{
  int x = (point > 0 ? point : -point) - 1;
  int s = point > 0 ? 1 : -1;
  return s * g.sign(x) * (g.perm(x) + 1);
}

std::vector<SignedPermutation> all_elements(int n)
{
  std::vector<SignedPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    perm[static_cast<std::size_t>(i)] = i;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<std::int8_t> signs(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
      out.emplace_back(signs, perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::size_t classes_by_conjugation(std::vector<SignedPermutation> const &group)
{
  std::set<std::size_t> seen;
  std::size_t count = 0;
  for (std::size_t a = 0; a < group.size(); ++a) {
    if (seen.count(a))
      continue;
    ++count;
    for (auto const &h : group) {
      auto c = h * group[a] * h.inverse();
      for (std::size_t b = 0; b < group.size(); ++b)
        if (group[b] == c)
          seen.insert(b);
      CHECK(signed_cycle_type(c) == signed_cycle_type(group[a]));
    }
  }
  return count;
}

} // namespace

TEST_CASE("composition is composition of maps")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 6;
    auto g = SignedPermutation::random(n, rng);
    auto h = SignedPermutation::random(n, rng);
    for (int x = 1; x <= n; ++x)
      for (int s : {1, -1})
        CHECK(apply(g * h, s * x) == apply(g, apply(h, s * x)));
  }
  // The flip acts before the relabelling.
  auto g = SignedPermutation({-1, 1}, {1, 0});
  CHECK(apply(g, 1) == -2);
  CHECK(apply(g, 2) == 1);
}

TEST_CASE("group laws hold on random elements")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + trial % 7;
    auto a = SignedPermutation::random(n, rng);
    auto b = SignedPermutation::random(n, rng);
    auto c = SignedPermutation::random(n, rng);
    auto e = SignedPermutation::identity(n);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == e);
    CHECK(a.inverse() * a == e);
    CHECK(a * e == a);
    CHECK(signed_cycle_type(a * b) == signed_cycle_type(b * a));
  }
}

TEST_CASE("constructors validate")
{
  CHECK_THROWS_AS(SignedPermutation({1, 1}, {0, 0}), ArgumentError);
  CHECK_THROWS_AS(SignedPermutation({1, 2}, {0, 1}), ArgumentError);
  CHECK_THROWS_AS(SignedPermutation({1}, {0, 1}), ArgumentError);
  CHECK(SignedPermutation::flip(3, 1).sign(1) == -1);
  CHECK(SignedPermutation::adjacent(3, 1).perm(1) == 2);
  CHECK(SignedPermutation::transposition(4, 0, 3).perm(3) == 0);
  CHECK(SignedPermutation::identity(3).unsigned_perm());
  CHECK_FALSE(SignedPermutation::flip(3, 0).unsigned_perm());
}

TEST_CASE("W_2 and W_3 conjugacy by brute force")
{
  auto w2 = all_elements(2);
  CHECK(w2.size() == 8);
  CHECK(classes_by_conjugation(w2) == 5);
  CHECK(ConjClassTable(GroupKind::hyperoctahedral, 2).size() == 5);

  auto w3 = all_elements(3);
  CHECK(classes_by_conjugation(w3) == 10);

  // class sizes from centralizers match the counted fibres of the type map
  ConjClassTable table(GroupKind::hyperoctahedral, 3);
  std::map<DoublePartition, long> fibre;
  for (auto const &g : w3)
    ++fibre[signed_cycle_type(g)];
  for (auto const &c : table.classes())
    CHECK(BigInt(fibre[c.label]) == c.size);
}

TEST_CASE("cycle types and representatives")
{
  auto g = SignedPermutation({-1, 1, 1, -1, 1}, {1, 2, 0, 3, 4});
  CHECK(signed_cycle_type(g) == DoublePartition{{1}, {3, 1}});
  CHECK(cycle_type(g) == Partition{3, 1, 1});
  for (int n = 0; n <= 6; ++n)
    for (auto const &d : enumerate_double_partitions(n))
      CHECK(signed_cycle_type(class_representative(d)) == d);
}

TEST_CASE("class tables")
{
  for (int n = 0; n <= 7; ++n)
    for (auto kind : {GroupKind::symmetric, GroupKind::hyperoctahedral}) {
      ConjClassTable t(kind, n);
      BigInt total = 0;
      for (auto const &c : t.classes())
        total += c.size;
      CHECK(total == t.group_order());
      CHECK(t.group_order() == group_order(kind, n));
    }
  std::mt19937_64 rng(3);
  ConjClassTable t(GroupKind::hyperoctahedral, 5);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = SignedPermutation::random(5, rng);
    CHECK(t[t.index_of(g)].label == signed_cycle_type(g));
  }
  ConjClassTable s(GroupKind::symmetric, 4);
  CHECK_THROWS_AS(s.index_of(SignedPermutation::flip(4, 0)), ArgumentError);
  CHECK_THROWS_AS(class_table(GroupKind::symmetric, 11), ResourceLimitError);
}
