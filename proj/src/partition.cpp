#include "psigma/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

#include "psigma/errors.hpp"

namespace psigma {

std::string_view to_string(GroupKind kind)
{
  return kind == GroupKind::symmetric ? "Sn" : "Wn";
}

GroupKind parse_group_kind(std::string_view text)
{
  if (text == "Sn" || text == "symmetric" || text == "S")
    return GroupKind::symmetric;
  if (text == "Wn" || text == "hyperoctahedral" || text == "W")
    return GroupKind::hyperoctahedral;
  throw ArgumentError("unknown group kind '" + std::string(text) + "'");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ArgumentError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts)
  : Partition(std::vector<int>(parts))
{}

Partition Partition::from_unsorted(std::vector<int> parts)
{
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    throw ArgumentError("partition parts must be non-negative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<int> Partition::multiplicities() const
{
  std::vector<int> m(static_cast<std::size_t>(size_) + 1, 0);
  for (int p : parts_)
    ++m[static_cast<std::size_t>(p)];
  return m;
}

Partition Partition::merged(Partition const &other) const
{
  std::vector<int> all;
  all.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(),
             other.parts_.end(), std::back_inserter(all), std::greater<>());
  return Partition(std::move(all));
}

Partition Partition::conjugate() const
{
  std::vector<int> conj(static_cast<std::size_t>(first()), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c)
      ++conj[static_cast<std::size_t>(c)];
  return Partition(std::move(conj));
}

Partition Partition::without_first_row() const
{
  if (parts_.empty())
    return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::with_first_row(int row) const
{
  if (row < first())
    throw ArgumentError("padding row " + std::to_string(row) +
                        " is shorter than the first part of " + str());
  std::vector<int> parts;
  if (row > 0)
    parts.push_back(row);
  parts.insert(parts.end(), parts_.begin(), parts_.end());
  return Partition(std::move(parts));
}

BigInt Partition::centralizer_order() const
{
  BigInt z = 1;
  auto m = multiplicities();
  for (std::size_t l = 1; l < m.size(); ++l)
    if (m[l] > 0)
      z *= power(static_cast<long>(l), static_cast<unsigned long>(m[l])) *
           factorial(static_cast<unsigned>(m[l]));
  return z;
}

BigInt Partition::dimension() const
{
  Partition conj = conjugate();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (int j = 0; j < parts_[i]; ++j)
      hooks *= (parts_[i] - j) + (conj[static_cast<std::size_t>(j)] -
                                  static_cast<int>(i)) - 1;
  return factorial(static_cast<unsigned>(size_)) / hooks;
}

std::string Partition::str() const
{
  if (parts_.empty())
    return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0)
      s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

std::string_view strip_parens(std::string_view s)
{
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    return trim(s.substr(1, s.size() - 2));
  return s;
}

// Splits "(a),(b)" at the top-level comma.
std::pair<std::string_view, std::string_view> split_pair(std::string_view s)
{
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(')
      ++depth;
    else if (s[i] == ')')
      --depth;
    else if (s[i] == ',' && depth == 0)
      return {s.substr(0, i), s.substr(i + 1)};
  }
  throw ArgumentError("expected a pair of partitions, got '" + std::string(s) +
                      "'");
}

} // namespace

Partition Partition::parse(std::string_view text)
{
  std::string_view body = strip_parens(text);
  std::vector<int> parts;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view tok = trim(body.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ArgumentError("bad partition '" + std::string(text) + "'");
    if (v != 0)
      parts.push_back(v);
    if (comma == std::string_view::npos)
      break;
    body.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::strong_ordering Partition::operator<=>(Partition const &other) const
{
  return std::lexicographical_compare_three_way(
    parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end());
}

std::ostream &operator<<(std::ostream &os, Partition const &p)
{
  return os << p.str();
}

std::vector<Partition> enumerate_partitions(int n)
{
  if (n < 0)
    throw ArgumentError("enumerate_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto &self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

BigInt DoublePartition::centralizer_order() const
{
  BigInt z = 1;
  for (Partition const *p : {&plus, &minus}) {
    auto m = p->multiplicities();
    for (std::size_t l = 1; l < m.size(); ++l)
      if (m[l] > 0)
        z *= power(2 * static_cast<long>(l), static_cast<unsigned long>(m[l])) *
             factorial(static_cast<unsigned>(m[l]));
  }
  return z;
}

std::string DoublePartition::str() const
{
  return "(" + plus.str() + "," + minus.str() + ")";
}

DoublePartition DoublePartition::parse(std::string_view text)
{
  auto [a, b] = split_pair(strip_parens(text));
  return {Partition::parse(a), Partition::parse(b)};
}

std::ostream &operator<<(std::ostream &os, DoublePartition const &p)
{
  return os << p.str();
}

std::vector<DoublePartition> enumerate_double_partitions(int n)
{
  std::vector<DoublePartition> out;
  for (int a = n; a >= 0; --a)
    for (auto const &plus : enumerate_partitions(a))
      for (auto const &minus : enumerate_partitions(n - a))
        out.push_back({plus, minus});
  return out;
}

bool StableName::valid_at(int n) const
{
  return n - weight() >= body.plus.first();
}

DoublePartition StableName::padded(int n) const
{
  if (!valid_at(n))
    throw ArgumentError("padding " + str() + " at n=" + std::to_string(n) +
                        " is invalid");
  return {body.plus.with_first_row(n - weight()), body.minus};
}

Partition StableName::padded_partition(int n) const
{
  return padded(n).plus;
}

StableName StableName::of(GroupKind kind, DoublePartition const &full)
{
  if (kind == GroupKind::symmetric && !full.minus.empty())
    throw ArgumentError("S_n names have no minus part");
  return {kind, {full.plus.without_first_row(), full.minus}};
}

StableName StableName::of(Partition const &full)
{
  return of(GroupKind::symmetric, {full, {}});
}

std::string StableName::str() const
{
  if (kind == GroupKind::symmetric)
    return "V" + body.plus.str();
  return "V" + body.str();
}

StableName StableName::parse(GroupKind kind, std::string_view text)
{
  text = trim(text);
  if (!text.empty() && text.front() == 'V')
    text.remove_prefix(1);
  if (kind == GroupKind::symmetric)
    return {kind, {Partition::parse(text), {}}};
  return {kind, DoublePartition::parse(text)};
}

std::ostream &operator<<(std::ostream &os, StableName const &s)
{
  return os << s.str();
}

} // namespace psigma
