#include "doctest.h"

#include <map>

#include "psigma/errors.hpp"
#include "psigma/partition.hpp"

using namespace psigma;

namespace {

// Euler's pentagonal recurrence, independent of the enumerator.
std::vector<long> partition_numbers(int top)
{
  std::vector<long> p(static_cast<std::size_t>(top + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= top; ++n)
    for (int j = 1;; ++j) {
      int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > n)
        break;
      long sign = j % 2 ? 1 : -1;
      p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n)
        p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g2)];
    }
  return p;
}

// Standard Young tableaux by removing corners.
long syt(Partition const &lambda, std::map<Partition, long> &memo)
{
  if (lambda.size() <= 1)
    return 1;
  if (auto it = memo.find(lambda); it != memo.end())
    return it->second;
  long total = 0;
  auto parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i + 1] == parts[i])
      continue;
    auto smaller = parts;
    --smaller[i];
    total += syt(Partition::from_unsorted(smaller), memo);
  }
  memo[lambda] = total;
  return total;
}

} // namespace

TEST_CASE("partition counts follow the pentagonal recurrence")
{
  auto p = partition_numbers(12);
  CHECK(p[9] == 30);
  for (int n = 0; n <= 12; ++n)
    CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(p[static_cast<std::size_t>(n)]));
}

TEST_CASE("partitions come in reverse lexicographic order")
{
  std::vector<Partition> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(enumerate_partitions(4) == want);
  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_partitions(n);
    for (std::size_t i = 1; i < all.size(); ++i)
      CHECK(all[i] < all[i - 1]);
  }
}

TEST_CASE("partition validation and text form")
{
  CHECK_THROWS_AS(Partition({1, 2}), ArgumentError);
  CHECK_THROWS_AS(Partition({2, 0}), ArgumentError);
  CHECK_THROWS_AS(Partition::from_unsorted({2, -1}), ArgumentError);
  CHECK(Partition::from_unsorted({1, 0, 3, 1}) == Partition{3, 1, 1});
  CHECK(Partition{}.str() == "(0)");
  CHECK(Partition::parse("(0)").empty());
  CHECK(Partition::parse("(3,1,1)") == Partition{3, 1, 1});
  CHECK(Partition{3, 1}.str() == "(3,1)");
  CHECK_THROWS_AS(Partition::parse("(3,x)"), ArgumentError);
}

TEST_CASE("conjugation and rows")
{
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition().conjugate().empty());
  for (int n = 0; n <= 8; ++n)
    for (auto const &p : enumerate_partitions(n))
      CHECK(p.conjugate().conjugate() == p);
  CHECK(Partition{2, 1}.with_first_row(3) == Partition{3, 2, 1});
  CHECK_THROWS_AS(Partition({2, 1}).with_first_row(1), ArgumentError);
  CHECK(Partition{3, 2, 1}.without_first_row() == Partition{2, 1});
}

TEST_CASE("hook length dimensions")
{
  std::map<Partition, long> memo;
  for (int n = 0; n <= 9; ++n) {
    BigInt burnside = 0;
    for (auto const &p : enumerate_partitions(n)) {
      CHECK(p.dimension() == syt(p, memo));
      burnside += p.dimension() * p.dimension();
    }
    CHECK(burnside == factorial(static_cast<unsigned>(n)));
  }
  CHECK(Partition{2, 1}.dimension() == 2);
  CHECK(Partition{3, 3}.dimension() == 5);
}

TEST_CASE("class equation through centralizers")
{
  for (int n = 0; n <= 8; ++n) {
    Rational s = 0;
    for (auto const &p : enumerate_partitions(n))
      s += Rational(1) / Rational(p.centralizer_order());
    CHECK(s == 1);
    Rational w = 0;
    for (auto const &d : enumerate_double_partitions(n))
      w += Rational(1) / Rational(d.centralizer_order());
    CHECK(w == 1);
  }
}

TEST_CASE("double partitions")
{
  std::vector<DoublePartition> want{
    {{2}, {}}, {{1, 1}, {}}, {{1}, {1}}, {{}, {2}}, {{}, {1, 1}}};
  CHECK(enumerate_double_partitions(2) == want);
  auto p = partition_numbers(8);
  for (int n = 0; n <= 8; ++n) {
    long count = 0;
    for (int a = 0; a <= n; ++a)
      count += p[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(n - a)];
    CHECK(enumerate_double_partitions(n).size() == static_cast<std::size_t>(count));
  }
  DoublePartition d{{2, 1}, {1}};
  CHECK(d.str() == "((2,1),(1))");
  CHECK(DoublePartition::parse("((2,1),(1))") == d);
  CHECK(DoublePartition::parse("((0),(1,1))") == DoublePartition{{}, {1, 1}});
  CHECK(d.underlying() == Partition{2, 1, 1});
  // 2^2 * 1 for the 2-cycle, 2 for the fixed point, 2 for the negative one
  CHECK(d.centralizer_order() == 16);
}

TEST_CASE("stable names")
{
  auto W = GroupKind::hyperoctahedral;
  auto S = GroupKind::symmetric;

  StableName h1 = StableName::parse(W, "V((1),(1))");
  CHECK(h1.str() == "V((1),(1))");
  CHECK(h1.weight() == 2);
  CHECK(h1.valid_at(3));
  CHECK_FALSE(h1.valid_at(2));
  CHECK(h1.padded(3) == DoublePartition{{1, 1}, {1}});
  CHECK_THROWS_AS(h1.padded(2), ArgumentError);

  StableName minus = StableName::parse(W, "V((0),(1))");
  CHECK(minus.padded(2) == DoublePartition{{1}, {1}});
  CHECK(minus.padded(1) == DoublePartition{{}, {1}});

  StableName s = StableName::parse(S, "V(3,1)");
  CHECK(s.valid_at(7));
  CHECK_FALSE(s.valid_at(6));
  CHECK(s.padded_partition(7) == Partition{3, 3, 1});
  CHECK(StableName::of(Partition{3, 3}).str() == "V(3)");
  CHECK(StableName::parse(S, "V(0)").body.plus.empty());

  for (int n = 1; n <= 7; ++n)
    for (auto const &d : enumerate_double_partitions(n)) {
      StableName name = StableName::of(W, d);
      CHECK(name.valid_at(n));
      CHECK(name.padded(n) == d);
      CHECK(StableName::parse(W, name.str()) == name);
    }
}

TEST_CASE("group kind names")
{
  CHECK(parse_group_kind("Sn") == GroupKind::symmetric);
  CHECK(parse_group_kind("Wn") == GroupKind::hyperoctahedral);
  CHECK(to_string(GroupKind::hyperoctahedral) == "Wn");
  CHECK_THROWS_AS(parse_group_kind("Bn"), ArgumentError);
}
