#include "psigma/signed_permutation.hpp"

#include <algorithm>
#include <numeric>

#include "psigma/errors.hpp"

namespace psigma {

SignedPermutation::SignedPermutation(std::vector<std::int8_t> signs,
                                     std::vector<int> perm)
  : signs_(std::move(signs)), perm_(std::move(perm))
{
  if (signs_.size() != perm_.size())
    throw ArgumentError("signed permutation: sign and perm lengths differ");
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= rank() || seen[static_cast<std::size_t>(p)])
      throw ArgumentError("signed permutation: perm is not a bijection");
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (auto s : signs_)
    if (s != 1 && s != -1)
      throw ArgumentError("signed permutation: signs must be +-1");
}

SignedPermutation SignedPermutation::identity(int n)
{
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return {std::vector<std::int8_t>(static_cast<std::size_t>(n), 1),
          std::move(perm)};
}

SignedPermutation SignedPermutation::from_perm(std::vector<int> perm)
{
  std::vector<std::int8_t> signs(perm.size(), 1);
  return {std::move(signs), std::move(perm)};
}

SignedPermutation SignedPermutation::flip(int n, int i)
{
  if (i < 0 || i >= n)
    throw ArgumentError("flip: vertex out of range");
  auto g = identity(n);
  g.signs_[static_cast<std::size_t>(i)] = -1;
  return g;
}

SignedPermutation SignedPermutation::adjacent(int n, int i)
{
  if (i < 0 || i + 1 >= n)
    throw ArgumentError("adjacent: vertex out of range");
  return transposition(n, i, i + 1);
}

SignedPermutation SignedPermutation::transposition(int n, int p, int q)
{
  if (p < 0 || q < 0 || p >= n || q >= n)
    throw ArgumentError("transposition: vertex out of range");
  auto g = identity(n);
  std::swap(g.perm_[static_cast<std::size_t>(p)],
            g.perm_[static_cast<std::size_t>(q)]);
  return g;
}

SignedPermutation SignedPermutation::random(int n, std::mt19937_64 &rng)
{
  auto g = random_unsigned(n, rng);
  std::bernoulli_distribution coin(0.5);
  for (auto &s : g.signs_)
    s = coin(rng) ? -1 : 1;
  return g;
}

SignedPermutation SignedPermutation::random_unsigned(int n, std::mt19937_64 &rng)
{
  auto g = identity(n);
  std::shuffle(g.perm_.begin(), g.perm_.end(), rng);
  return g;
}

bool SignedPermutation::unsigned_perm() const
{
  return std::all_of(signs_.begin(), signs_.end(), [](auto s) { return s == 1; });
}

SignedPermutation SignedPermutation::operator*(SignedPermutation const &rhs) const
{
  if (rank() != rhs.rank())
    throw ArgumentError("signed permutation product: rank mismatch");
  SignedPermutation out = rhs;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    auto through = static_cast<std::size_t>(rhs.perm_[i]);
    out.perm_[i] = perm_[through];
    out.signs_[i] = static_cast<std::int8_t>(rhs.signs_[i] * signs_[through]);
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const
{
  SignedPermutation out = *this;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    auto j = static_cast<std::size_t>(perm_[i]);
    out.perm_[j] = static_cast<int>(i);
    out.signs_[j] = signs_[i];
  }
  return out;
}

std::string SignedPermutation::str() const
{
  std::string s = "[";
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (i > 0)
      s += ' ';
    if (signs_[i] < 0)
      s += '-';
    s += std::to_string(perm_[i] + 1);
  }
  return s + "]";
}

DoublePartition signed_cycle_type(SignedPermutation const &g)
{
  int n = g.rank();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> pos, neg;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    int len = 0, sign = 1;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = g.perm(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      sign *= g.sign(x);
      ++len;
    }
    (sign > 0 ? pos : neg).push_back(len);
  }
  return {Partition::from_unsorted(std::move(pos)),
          Partition::from_unsorted(std::move(neg))};
}

Partition cycle_type(SignedPermutation const &g)
{
  return signed_cycle_type(g).underlying();
}

SignedPermutation class_representative(DoublePartition const &type)
{
  int n = type.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<std::int8_t> signs(static_cast<std::size_t>(n), 1);
  int next = 0;
  auto place = [&](int len, bool negative) {
    for (int t = 0; t < len; ++t)
      perm[static_cast<std::size_t>(next + t)] = next + (t + 1) % len;
    if (negative)
      signs[static_cast<std::size_t>(next)] = -1;
    next += len;
  };
  for (int l : type.plus.parts())
    place(l, false);
  for (int l : type.minus.parts())
    place(l, true);
  return {std::move(signs), std::move(perm)};
}

} // namespace psigma
