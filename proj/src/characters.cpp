#include "psigma/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "psigma/errors.hpp"
#include "psigma/parallel.hpp"

namespace psigma {

Rational inner_product(ConjClassTable const &classes, ClassFunction const &f,
                       ClassFunction const &g)
{
  if (f.values.size() != classes.size() || g.values.size() != classes.size())
    throw ArgumentError("inner product: class function length mismatch");
  Rational sum = 0;
  for (std::size_t c = 0; c < classes.size(); ++c)
    sum += f[c] * g[c] / Rational(classes[c].centralizer);
  sum.canonicalize();
  return sum;
}

namespace {

using Beta = std::vector<int>;

std::string memo_key(Partition const &lambda, Partition const &mu)
{
  std::string key;
  key.reserve(lambda.length() + mu.length() + 1);
  for (int p : lambda.parts())
    key.push_back(static_cast<char>(p));
  key.push_back('\0');
  for (int p : mu.parts())
    key.push_back(static_cast<char>(p));
  return key;
}

class MnMemo {
public:
  std::optional<long long> find(std::string const &key) const
  {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end())
      return std::nullopt;
    return it->second;
  }

  void insert(std::string key, long long value)
  {
    std::unique_lock lock(mutex_);
    values_.try_emplace(std::move(key), value);
  }

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, long long> values_;
};

MnMemo &mn_memo()
{
  static MnMemo memo;
  return memo;
}

Partition from_beta(Beta beta)
{
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> parts;
  int len = static_cast<int>(beta.size());
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0)
      parts.push_back(part);
  }
  return Partition(std::move(parts));
}

long long mn_recursive(Partition const &lambda, Partition const &mu)
{
  if (mu.empty())
    return 1;

  std::string key = memo_key(lambda, mu);
  if (auto hit = mn_memo().find(key))
    return *hit;

  // Strip the largest cycle: remove every rim hook of that length.
  int r = mu.first();
  Partition rest = mu.without_first_row();

  int len = static_cast<int>(lambda.length());
  Beta beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  long long value = 0;
  for (int i = 0; i < len; ++i) {
    int from = beta[static_cast<std::size_t>(i)];
    int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end())
      continue;
    int between = 0;
    for (int b : beta)
      if (b > to && b < from)
        ++between;
    Beta moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    long long term = mn_recursive(from_beta(std::move(moved)), rest);
    value += (between % 2 == 0) ? term : -term;
  }

  mn_memo().insert(std::move(key), value);
  return value;
}

} // namespace

long long mn_character(Partition const &lambda, Partition const &mu)
{
  if (lambda.size() != mu.size())
    throw ArgumentError("mn_character: |" + lambda.str() + "| != |" + mu.str() +
                        "|");
  return mn_recursive(lambda, mu);
}

int epsilon_value(DoublePartition const &cls)
{
  return cls.minus.length() % 2 == 0 ? 1 : -1;
}

void for_each_class_splitting(
  DoublePartition const &cls, int a,
  std::function<void(DoublePartition const &, DoublePartition const &,
                     BigInt const &)> const &visit)
{
  struct Block {
    int length;
    int count;
    bool negative;
  };
  std::vector<Block> blocks;
  for (bool negative : {false, true}) {
    auto m = (negative ? cls.minus : cls.plus).multiplicities();
    for (std::size_t l = m.size(); l-- > 1;)
      if (m[l] > 0)
        blocks.push_back({static_cast<int>(l), m[l], negative});
  }

  // Suffix sums bound how much size the remaining blocks can still supply.
  std::vector<int> available(blocks.size() + 1, 0);
  for (std::size_t i = blocks.size(); i-- > 0;)
    available[i] = available[i + 1] + blocks[i].length * blocks[i].count;

  BigInt z = cls.centralizer_order();
  std::vector<int> take(blocks.size(), 0);

  auto emit = [&] {
    std::vector<int> p1, m1, p2, m2;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      auto &first = blocks[i].negative ? m1 : p1;
      auto &second = blocks[i].negative ? m2 : p2;
      first.insert(first.end(), static_cast<std::size_t>(take[i]), blocks[i].length);
      second.insert(second.end(), static_cast<std::size_t>(blocks[i].count - take[i]),
                    blocks[i].length);
    }
    DoublePartition left{Partition(std::move(p1)), Partition(std::move(m1))};
    DoublePartition right{Partition(std::move(p2)), Partition(std::move(m2))};
    BigInt denom = left.centralizer_order() * right.centralizer_order();
    if (!mpz_divisible_p(z.get_mpz_t(), denom.get_mpz_t()))
      throw ConsistencyError("class fusion coefficient is not integral for " +
                             cls.str());
    BigInt coeff = z / denom;
    visit(left, right, coeff);
  };

  auto rec = [&](auto &self, std::size_t i, int remaining) -> void {
    if (i == blocks.size()) {
      if (remaining == 0)
        emit();
      return;
    }
    if (remaining > available[i])
      return;
    for (int t = 0; t <= blocks[i].count && t * blocks[i].length <= remaining; ++t) {
      take[i] = t;
      self(self, i + 1, remaining - t * blocks[i].length);
    }
    take[i] = 0;
  };
  rec(rec, 0, a);
}

long long wn_character(DoublePartition const &lambda, DoublePartition const &cls)
{
  if (lambda.size() != cls.size())
    throw ArgumentError("wn_character: |" + lambda.str() + "| != |" + cls.str() +
                        "|");
  BigInt total = 0;
  for_each_class_splitting(
    cls, lambda.plus.size(),
    [&](DoublePartition const &left, DoublePartition const &right,
        BigInt const &coeff) {
      long long v = mn_character(lambda.plus, left.underlying()) *
                    mn_character(lambda.minus, right.underlying()) *
                    epsilon_value(right);
      total += coeff * BigInt(static_cast<long>(v));
    });
  if (!total.fits_slong_p())
    throw ConsistencyError("wn_character: value out of range");
  return total.get_si();
}

CharacterTable::CharacterTable(ConjClassTable classes,
                               std::vector<DoublePartition> labels,
                               std::vector<std::vector<long long>> rows)
  : classes_(std::move(classes)), labels_(std::move(labels)), rows_(std::move(rows))
{
  if (labels_.size() != rows_.size() || labels_.size() != classes_.size())
    throw ConsistencyError("character table: irreducible count != class count");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (rows_[i].size() != classes_.size())
      throw ConsistencyError("character table: row length mismatch");
    if (!index_.emplace(labels_[i], i).second)
      throw ConsistencyError("character table: duplicate label " + labels_[i].str());
  }
}

std::size_t CharacterTable::index_of(DoublePartition const &label) const
{
  auto it = index_.find(label);
  if (it == index_.end())
    throw ArgumentError("no irreducible " + label.str());
  return it->second;
}

long long CharacterTable::dimension(std::size_t i) const
{
  auto id = signed_cycle_type(SignedPermutation::identity(rank()));
  return rows_[i][classes_.index_of(id)];
}

ClassFunction CharacterTable::character(std::size_t i) const
{
  ClassFunction f{kind(), rank(), {}};
  f.values.reserve(rows_[i].size());
  for (long long v : rows_[i])
    f.values.emplace_back(static_cast<long>(v));
  return f;
}

std::optional<std::string> CharacterTable::orthogonality_failure() const
{
  std::size_t m = classes_.size();
  BigInt const &order = classes_.group_order();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      BigInt sum = 0;
      for (std::size_t c = 0; c < m; ++c) {
        long long prod = rows_[i][c] * rows_[j][c];
        if (prod != 0)
          sum += BigInt(static_cast<long>(prod)) * classes_[c].size;
      }
      BigInt expected = i == j ? order : BigInt(0);
      if (sum != expected)
        return "rows " + labels_[i].str() + " and " + labels_[j].str() +
               " have inner product " + sum.get_str() + "/" + order.get_str();
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t d = c; d < m; ++d) {
      BigInt sum = 0;
      for (std::size_t i = 0; i < m; ++i)
        sum += BigInt(static_cast<long>(rows_[i][c] * rows_[i][d]));
      BigInt expected = c == d ? classes_[c].centralizer : BigInt(0);
      if (sum != expected)
        return "columns " + classes_[c].label.str() + " and " +
               classes_[d].label.str() + " are not orthogonal";
    }
  }
  return std::nullopt;
}

bool CharacterTable::operator==(CharacterTable const &other) const
{
  return kind() == other.kind() && rank() == other.rank() &&
         labels_ == other.labels_ && rows_ == other.rows_;
}

CharacterTable character_table(GroupKind kind, int n, Limits const &limits,
                               int threads)
{
  ConjClassTable classes = class_table(kind, n, limits);
  std::vector<DoublePartition> labels;
  labels.reserve(classes.size());
  for (auto const &c : classes.classes())
    labels.push_back(c.label);

  std::vector<std::vector<long long>> rows(labels.size());
  parallel_for(labels.size(), threads, [&](std::size_t i) {
    auto &row = rows[i];
    row.reserve(classes.size());
    for (auto const &c : classes.classes())
      row.push_back(kind == GroupKind::symmetric
                      ? mn_character(labels[i].plus, c.label.plus)
                      : wn_character(labels[i], c.label));
  });

  CharacterTable table(std::move(classes), std::move(labels), std::move(rows));
  if (auto failure = table.orthogonality_failure())
    throw ConsistencyError("character table " + std::string(to_string(kind)) +
                           " n=" + std::to_string(n) + ": " + *failure);
  return table;
}

ClassFunction restrict_to_symmetric(ClassFunction const &f,
                                    ConjClassTable const &wn_classes,
                                    ConjClassTable const &sn_classes)
{
  if (wn_classes.kind() != GroupKind::hyperoctahedral ||
      sn_classes.kind() != GroupKind::symmetric ||
      wn_classes.rank() != sn_classes.rank())
    throw ArgumentError("restrict_to_symmetric: incompatible tables");
  ClassFunction out{GroupKind::symmetric, sn_classes.rank(), {}};
  for (auto const &c : sn_classes.classes())
    out.values.push_back(f[wn_classes.index_of(DoublePartition{c.label.plus, {}})]);
  return out;
}

ClassFunction induce_product(ConjClassTable const &target,
                             CharacterTable const &left, ClassFunction const &phi1,
                             CharacterTable const &right,
                             ClassFunction const &phi2)
{
  if (left.kind() != target.kind() || right.kind() != target.kind() ||
      left.rank() + right.rank() != target.rank())
    throw ArgumentError("induce_product: incompatible tables");
  ClassFunction out{target.kind(), target.rank(), {}};
  for (auto const &c : target.classes()) {
    Rational value = 0;
    for_each_class_splitting(
      c.label, left.rank(),
      [&](DoublePartition const &l, DoublePartition const &r, BigInt const &coeff) {
        value += Rational(coeff) * phi1[left.classes().index_of(l)] *
                 phi2[right.classes().index_of(r)];
      });
    out.values.push_back(value);
  }
  return out;
}

} // namespace psigma
