#include "psigma/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "psigma/decomposition.hpp"
#include "psigma/errors.hpp"
#include "psigma/forest.hpp"
#include "psigma/group_action.hpp"
#include "psigma/presentation_oracle.hpp"
#include "psigma/report.hpp"
#include "psigma/sparse_rank.hpp"

namespace psigma::acceptance {

namespace {

using Expected = std::map<StableName, long long>;

Expected expected(GroupKind kind,
                  std::initializer_list<std::pair<char const *, long long>> items)
{
  Expected out;
  for (auto const &[name, mult] : items)
    out[StableName::parse(kind, name)] = mult;
  return out;
}

std::string describe(Expected const &m)
{
  std::string s;
  for (auto const &[name, mult] : m) {
    if (!s.empty())
      s += " + ";
    s += name.str();
    if (mult != 1)
      s += "^" + std::to_string(mult);
  }
  return s.empty() ? "0" : s;
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string const &why)
  {
    if (ok)
      detail = why;
    ok = false;
  }
};

Outcome dimension_formula()
{
  Outcome out;
  std::uint64_t total = 0;
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      std::uint64_t counted = count_forests(n, k);
      total += counted;
      if (BigInt(static_cast<unsigned long>(counted)) != forest_count(n, k))
        out.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": counted " +
                 std::to_string(counted) + ", formula " + forest_count(n, k).get_str());
    }
  if (out.ok)
    out.detail = std::to_string(total) + " forests enumerated for n <= 9";
  return out;
}

Outcome compare_decomposition(MultiplicityVector const &got, Expected const &want)
{
  Outcome out;
  if (got.stable() != want)
    out.fail(std::string(to_string(got.kind)) + " n=" + std::to_string(got.n) +
             " k=" + std::to_string(got.k) + ": got " + summary_line(got) +
             ", expected " + describe(want));
  return out;
}

Outcome h1_wn(TableStore &tables)
{
  auto const W = GroupKind::hyperoctahedral;
  for (int n = 2; n <= 8; ++n) {
    Expected want = n == 2 ? expected(W, {{"V((0),(1))", 1}})
                           : expected(W, {{"V((0),(1))", 1}, {"V((1),(1))", 1}});
    Outcome o = compare_decomposition(decompose(n, 1, W, tables), want);
    if (!o.ok)
      return o;
  }
  return {true, "n = 2..8 match"};
}

Outcome h1_sn(TableStore &tables)
{
  auto const S = GroupKind::symmetric;
  for (int n = 2; n <= 9; ++n) {
    Expected want;
    if (n == 2)
      want = expected(S, {{"V(0)", 1}, {"V(1)", 1}});
    else if (n == 3)
      want = expected(S, {{"V(0)", 1}, {"V(1)", 2}, {"V(1,1)", 1}});
    else
      want = expected(S, {{"V(0)", 1}, {"V(1)", 2}, {"V(1,1)", 1}, {"V(2)", 1}});
    Outcome o = compare_decomposition(decompose(n, 1, S, tables), want);
    if (!o.ok)
      return o;
  }
  return {true, "n = 2..9 match"};
}

Outcome h2_sn(TableStore &tables)
{
  auto const S = GroupKind::symmetric;
  std::map<int, Expected> rows;
  rows[2] = {};
  rows[3] = expected(S, {{"V(1,1)", 2}, {"V(1)", 3}, {"V(0)", 1}});
  rows[4] = expected(S, {{"V(1,1,1)", 2}, {"V(1,1)", 7}, {"V(2)", 3}, {"V(1)", 6},
                         {"V(0)", 1}});
  rows[5] = expected(S, {{"V(1,1,1)", 4}, {"V(2,1)", 5}, {"V(1,1)", 9}, {"V(2)", 6},
                         {"V(1)", 6}, {"V(0)", 1}});
  rows[6] = expected(S, {{"V(2,1,1)", 2}, {"V(1,1,1)", 4}, {"V(2,1)", 7}, {"V(3)", 3},
                         {"V(1,1)", 9}, {"V(2)", 6}, {"V(1)", 6}, {"V(0)", 1}});
  Expected stable = expected(S, {{"V(2,1,1)", 2}, {"V(3,1)", 2}, {"V(1,1,1)", 4},
                                 {"V(2,1)", 7}, {"V(3)", 3}, {"V(1,1)", 9},
                                 {"V(2)", 6}, {"V(1)", 6}, {"V(0)", 1}});
  rows[7] = stable;
  rows[8] = stable;
  for (auto const &[n, want] : rows) {
    Outcome o = compare_decomposition(decompose(n, 2, S, tables), want);
    if (!o.ok)
      return o;
  }
  return {true, "n = 2..6 rows and the stable line at n = 7, 8 match"};
}

Outcome wn_trivial(TableStore &tables)
{
  Outcome out;
  Limits const &limits = tables.limits();
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 8; ++n) {
      BigInt m = trivial_multiplicity(n, k, GroupKind::hyperoctahedral, limits,
                                      tables.threads());
      if (m != 0)
        out.fail("trivial multiplicity " + m.get_str() + " at n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
    }
  std::uint64_t checked = 0;
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= n - 1; ++k)
      for_each_forest(n, k, [&](std::span<int const> parent) {
        RootedForest f(std::vector<int>(parent.begin(), parent.end()));
        SignedPermutation w = find_negating_involution(f);
        SignedBasisVector image = act(w, f);
        if (!(w * w == SignedPermutation::identity(n)) || image.forest != f ||
            image.coeff != -1)
          out.fail("involution check failed for " + f.dump());
        ++checked;
      });
  if (out.ok)
    out.detail = "inner products vanish for k = 1..4, n <= 8; " +
                 std::to_string(checked) + " forests negated";
  return out;
}

std::size_t span_rank(std::vector<ForestVector> const &vectors)
{
  std::map<RootedForest, std::size_t> column;
  for (auto const &v : vectors)
    for (auto const &[f, c] : v)
      column.emplace(f, column.size());
  SparseMatrix m(column.size());
  for (auto const &v : vectors) {
    SparseRow row;
    for (auto const &[f, c] : v)
      if (c != 0)
        row.emplace_back(column.at(f), Rational(c));
    m.add_row(std::move(row));
  }
  return exact_rank(m);
}

Outcome sn_invariants(TableStore &tables)
{
  Outcome out;
  Limits const &limits = tables.limits();
  struct Case {
    int k;
    int n_from;
    long expected;
  };
  for (Case c : {Case{1, 2, 1}, Case{2, 3, 1}, Case{3, 5, 3}})
    for (int n = c.n_from; n <= 9; ++n) {
      BigInt m = trivial_multiplicity(n, c.k, GroupKind::symmetric, limits,
                                      tables.threads());
      if (m != c.expected)
        out.fail("k=" + std::to_string(c.k) + " n=" + std::to_string(n) +
                 ": trivial multiplicity " + m.get_str());
    }

  for (int n = 5; n <= 7; ++n) {
    std::vector<ForestVector> vectors;
    for (auto const &edges : {std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}},
                              std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 2}},
                              std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 4}}}) {
      ForestVector v = symmetrize(RootedForest::from_edges(n, edges));
      for (int i = 0; i + 1 < n; ++i)
        if (act(SignedPermutation::adjacent(n, i), v) != v)
          out.fail("symmetrized vector not invariant at n=" + std::to_string(n));
      vectors.push_back(std::move(v));
    }
    std::size_t r = span_rank(vectors);
    if (r != 3)
      out.fail("symmetrized forests span rank " + std::to_string(r) + " at n=" +
               std::to_string(n));
  }
  if (out.ok)
    out.detail = "multiplicities 1, 1, 3 through n = 9; symmetrized forests span rank 3 "
                 "for n = 5..7";
  return out;
}

Outcome presentation(TableStore &tables)
{
  Outcome out;
  Limits const &limits = tables.limits();
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= 3; ++k) {
      std::size_t q = oracle::quotient_rank(n, k, limits);
      if (BigInt(static_cast<unsigned long>(q)) != forest_count(n, k))
        out.fail("quotient rank " + std::to_string(q) + " at n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
      if (!oracle::verify_forest_basis(n, k, limits))
        out.fail("forest basis check failed at n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
    }
  oracle::PresentedAlgebra a2(3, 2, limits);
  oracle::PresentedAlgebra a3(3, 3, limits);
  if (!oracle::reduces_to_zero(a2, {{0, 1}, {1, 0}}))
    out.fail("2-cycle monomial does not vanish");
  if (!oracle::reduces_to_zero(a3, {{0, 1}, {1, 2}, {2, 0}}))
    out.fail("3-cycle monomial does not vanish");
  if (out.ok)
    out.detail = "quotient ranks equal forest counts and forests form a basis for "
                 "n <= 5, k <= 3; cyclic monomials vanish";
  return out;
}

Outcome pieri(TableStore &tables)
{
  std::size_t checked = 0;
  for (int r = 0; r <= 3; ++r)
    for (auto const &lambda : enumerate_double_partitions(r))
      for (int n = r; n <= 7; ++n) {
        if (!induction_character_check(lambda, n, tables))
          return {false, "disagreement for " + lambda.str() + " at n=" + std::to_string(n)};
        ++checked;
      }
  return {true, std::to_string(checked) + " (lambda, n) pairs agree"};
}

Outcome stability(TableStore &tables)
{
  Outcome out;
  struct Case {
    int k;
    GroupKind kind;
    int n_max;
    std::optional<int> expected;
  };
  std::string found;
  for (Case c : {Case{1, GroupKind::hyperoctahedral, 8, 3},
                 Case{1, GroupKind::symmetric, 9, 4},
                 Case{2, GroupKind::symmetric, 9, 7},
                 Case{2, GroupKind::hyperoctahedral, 8, std::nullopt}}) {
    StabilityReport rep = stability_scan(c.k, c.kind, c.n_max, tables);
    std::string tag = "k=" + std::to_string(c.k) + " " + std::string(to_string(c.kind));
    std::string at = rep.stable_from ? std::to_string(*rep.stable_from) : "none";
    found += (found.empty() ? "" : ", ") + tag + " from " + at;
    if (!rep.stable_from) {
      out.fail(tag + ": no stabilization detected up to n=" + std::to_string(c.n_max));
      continue;
    }
    if (c.expected && *rep.stable_from != *c.expected)
      out.fail(tag + ": stabilizes at " + at + ", expected " +
               std::to_string(*c.expected));
    if (*rep.stable_from > rep.bound || rep.violation)
      out.fail(tag + ": stabilization " + at + " exceeds 4k");
  }
  if (out.ok)
    out.detail = found;
  else
    out.detail += " [" + found + "]";
  return out;
}

Outcome table_health(TableStore &tables)
{
  Outcome out;
  for (auto [kind, top] : {std::pair{GroupKind::symmetric, 9},
                           std::pair{GroupKind::hyperoctahedral, 8}})
    for (int n = 0; n <= top; ++n) {
      CharacterTable const &t = tables.get(kind, n);
      if (auto failure = t.orthogonality_failure())
        out.fail(std::string(to_string(kind)) + " n=" + std::to_string(n) + ": " +
                 *failure);
      BigInt burnside = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        BigInt d = static_cast<long>(t.dimension(i));
        burnside += d * d;
      }
      if (burnside != t.classes().group_order())
        out.fail(std::string(to_string(kind)) + " n=" + std::to_string(n) +
                 ": sum of squared dimensions " + burnside.get_str());
    }
  if (out.ok)
    out.detail = "S_n for n <= 9 and W_n for n <= 8";
  return out;
}

Outcome surjectivity()
{
  Outcome out;
  std::uint64_t checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for_each_forest(n + 1, k, [&](std::span<int const> parent) {
        RootedForest f(std::vector<int>(parent.begin(), parent.end()));
        int v = -1;
        for (int u = n; u >= 0 && v < 0; --u)
          if (f.isolated_vertex(u))
            v = u;
        if (v < 0) {
          out.fail("no isolated vertex in " + f.dump());
          return;
        }
        RootedForest moved = act(SignedPermutation::transposition(n + 1, v, n), f).forest;
        std::vector<int> head(moved.parents().begin(), moved.parents().end() - 1);
        if (!moved.isolated_vertex(n) || stabilize(RootedForest(head)) != moved)
          out.fail("orbit of " + f.dump() + " misses the stabilized forests");
        ++checked;
      });
  if (out.ok)
    out.detail = std::to_string(checked) + " forests of rank n+1 checked for n <= 7";
  return out;
}

struct CriterionInfo {
  char const *title;
  std::optional<double> budget;
};

CriterionInfo info_of(int id)
{
  switch (id) {
  case 1: return {"dimension formula", 60.0};
  case 2: return {"H^1 W_n decomposition", std::nullopt};
  case 3: return {"H^1 S_n decomposition", std::nullopt};
  case 4: return {"H^2 S_n decomposition", 600.0};
  case 5: return {"trivial W_n multiplicity vanishes", std::nullopt};
  case 6: return {"S_n invariants and symmetrized forests", std::nullopt};
  case 7: return {"presentation oracle", 300.0};
  case 8: return {"Pieri induction", std::nullopt};
  case 9: return {"stability points", std::nullopt};
  case 10: return {"character table health", std::nullopt};
  case 11: return {"stabilized forests reach every orbit", std::nullopt};
  default: throw ArgumentError("no acceptance criterion " + std::to_string(id));
  }
}

Outcome dispatch(int id, TableStore &tables)
{
  switch (id) {
  case 1: return dimension_formula();
  case 2: return h1_wn(tables);
  case 3: return h1_sn(tables);
  case 4: return h2_sn(tables);
  case 5: return wn_trivial(tables);
  case 6: return sn_invariants(tables);
  case 7: return presentation(tables);
  case 8: return pieri(tables);
  case 9: return stability(tables);
  case 10: return table_health(tables);
  case 11: return surjectivity();
  }
  throw ArgumentError("no acceptance criterion " + std::to_string(id));
}

} // namespace

CriterionResult run_criterion(int id, TableStore &tables)
{
  CriterionInfo info = info_of(id);
  CriterionResult r;
  r.id = id;
  r.title = info.title;
  r.budget_seconds = info.budget;
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = dispatch(id, tables);
    r.passed = o.ok;
    r.detail = o.detail;
  } catch (std::exception const &e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.budget_seconds && r.seconds > *r.budget_seconds) {
    r.passed = false;
    r.detail += "; exceeded the " + std::to_string(static_cast<int>(*r.budget_seconds)) +
                " s budget";
  }
  return r;
}

std::vector<CriterionResult>
run_all(TableStore &tables, std::function<void(CriterionResult const &)> const &report)
{
  std::vector<CriterionResult> results;
  for (int id = 1; id <= criterion_count; ++id) {
    results.push_back(run_criterion(id, tables));
    if (report)
      report(results.back());
  }
  return results;
}

std::string format_line(CriterionResult const &r)
{
  char head[64];
  std::snprintf(head, sizeof head, "[%s] %02d ", r.passed ? "PASS" : "FAIL", r.id);
  char time[48];
  if (r.budget_seconds)
    std::snprintf(time, sizeof time, " (%.1f s of %.0f s)", r.seconds, *r.budget_seconds);
  else
    std::snprintf(time, sizeof time, " (%.1f s)", r.seconds);
  return head + r.title + time + ": " + r.detail;
}

} // namespace psigma::acceptance
