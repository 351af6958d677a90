#include "psigma/group_action.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "psigma/errors.hpp"
#include "psigma/parallel.hpp"

namespace psigma {

namespace {

int sort_sign(std::vector<int> const &seq)
{
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b])
        ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

SignedBasisVector act(SignedPermutation const &g, RootedForest const &f)
{
  if (g.rank() != f.rank())
    throw ArgumentError("act: rank mismatch");
  int n = f.rank();
  std::vector<int> parent(static_cast<std::size_t>(n), no_parent);
  std::vector<int> relabelled_children;
  int coeff = 1;
  for (int c = 0; c < n; ++c) {
    int p = f.parent(c);
    if (p == no_parent)
      continue;
    parent[static_cast<std::size_t>(g.perm(c))] = g.perm(p);
    relabelled_children.push_back(g.perm(c));
    coeff *= g.sign(p);
  }
  coeff *= sort_sign(relabelled_children);
  return {RootedForest(std::move(parent)), coeff};
}

int fixed_coefficient(SignedPermutation const &g, std::span<int const> parent)
{
  int n = g.rank();
  for (int v = 0; v < n; ++v) {
    int p = parent[static_cast<std::size_t>(v)];
    int image = p == no_parent ? no_parent : g.perm(p);
    if (parent[static_cast<std::size_t>(g.perm(v))] != image)
      return 0;
  }
  int coeff = 1;
  int inversions = 0;
  // Children in increasing order map to g(children); count inversions.
  for (int a = 0; a < n; ++a) {
    int p = parent[static_cast<std::size_t>(a)];
    if (p == no_parent)
      continue;
    coeff *= g.sign(p);
    for (int b = a + 1; b < n; ++b)
      if (parent[static_cast<std::size_t>(b)] != no_parent && g.perm(a) > g.perm(b))
        ++inversions;
  }
  return inversions % 2 == 0 ? coeff : -coeff;
}

namespace {

long long trace_full_scan(SignedPermutation const &g, int k)
{
  long long sum = 0;
  for_each_forest(g.rank(), k,
                  [&](std::span<int const> parent) { sum += fixed_coefficient(g, parent); });
  return sum;
}

// A forest fixed by g has a parent map commuting with the permutation part.
// On the level of g-cycles this is a forest in which cycle C may hang below
// cycle D only when |D| divides |C| (and D != C); the leader of C then picks
// any of the |D| vertices of D and the rest of C follows by applying g.
struct OrbitTracer {
  SignedPermutation const &g;
  int k;
  std::vector<std::vector<int>> cycles;
  std::vector<int> cycle_parent;
  std::vector<int> offset;
  std::vector<int> suffix_length;
  detail::RollbackUnionFind uf;
  std::vector<int> parent;
  long long sum = 0;

  OrbitTracer(SignedPermutation const &g_, int k_)
    : g(g_), k(k_), uf(0), parent(static_cast<std::size_t>(g_.rank()), no_parent)
  {
    int n = g.rank();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)])
        continue;
      std::vector<int> cyc;
      for (int x = s; !seen[static_cast<std::size_t>(x)]; x = g.perm(x)) {
        seen[static_cast<std::size_t>(x)] = true;
        cyc.push_back(x);
      }
      cycles.push_back(std::move(cyc));
    }
    std::size_t m = cycles.size();
    cycle_parent.assign(m, -1);
    offset.assign(m, 0);
    suffix_length.assign(m + 1, 0);
    for (std::size_t i = m; i-- > 0;)
      suffix_length[i] = suffix_length[i + 1] + static_cast<int>(cycles[i].size());
    uf = detail::RollbackUnionFind(static_cast<int>(m));
  }

  void emit()
  {
    std::fill(parent.begin(), parent.end(), no_parent);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (cycle_parent[i] < 0)
        continue;
      auto const &up = cycles[static_cast<std::size_t>(cycle_parent[i])];
      auto const &cyc = cycles[i];
      for (std::size_t t = 0; t < cyc.size(); ++t)
        parent[static_cast<std::size_t>(cyc[t])] =
          up[(static_cast<std::size_t>(offset[i]) + t) % up.size()];
    }
    int c = fixed_coefficient(g, parent);
    if (c == 0)
      throw ConsistencyError("orbit construction produced a non-fixed forest");
    sum += c;
  }

  void run(std::size_t i, int edges)
  {
    if (i == cycles.size()) {
      if (edges == k)
        emit();
      return;
    }
    int need = k - edges;
    if (need > suffix_length[i])
      return;
    int len = static_cast<int>(cycles[i].size());

    cycle_parent[i] = -1;
    run(i + 1, edges);

    if (len > need)
      return;
    int ri = uf.find(static_cast<int>(i));
    for (std::size_t j = 0; j < cycles.size(); ++j) {
      int up_len = static_cast<int>(cycles[j].size());
      if (j == i || len % up_len != 0)
        continue;
      int rj = uf.find(static_cast<int>(j));
      if (rj == ri)
        continue;
      int absorbed = uf.unite_roots(ri, rj);
      cycle_parent[i] = static_cast<int>(j);
      for (int s = 0; s < up_len; ++s) {
        offset[i] = s;
        run(i + 1, edges + len);
      }
      uf.undo(absorbed);
    }
    cycle_parent[i] = -1;
    offset[i] = 0;
  }
};

} // namespace

long long trace(SignedPermutation const &g, int k, TraceMethod method)
{
  int n = g.rank();
  if (k < 0 || k >= n)
    return k == 0 && n == 0 ? 1 : 0;
  if (method == TraceMethod::automatic)
    method = n >= 8 ? TraceMethod::orbit : TraceMethod::full_scan;
  if (method == TraceMethod::full_scan)
    return trace_full_scan(g, k);
  OrbitTracer tracer(g, k);
  tracer.run(0, 0);
  return tracer.sum;
}

ClassFunction cohomology_character(GroupKind kind, int n, int k, Limits const &limits,
                                   TraceMethod method, int threads)
{
  ConjClassTable classes = class_table(kind, n, limits);
  ClassFunction chi{kind, n, std::vector<Rational>(classes.size())};
  std::vector<long long> values(classes.size());
  parallel_for(classes.size(), threads, [&](std::size_t c) {
    values[c] = trace(classes[c].representative, k, method);
  });
  for (std::size_t c = 0; c < values.size(); ++c)
    chi.values[c] = Rational(static_cast<long>(values[c]));
  return chi;
}

SignedPermutation find_negating_involution(RootedForest const &f)
{
  if (f.degree() < 1)
    throw ArgumentError("find_negating_involution: forest has no edges");
  int n = f.rank();
  auto children = f.child_counts();

  SignedPermutation omega;
  auto odd = std::find_if(children.begin(), children.end(),
                          [](int c) { return c % 2 == 1; });
  if (odd != children.end()) {
    omega = SignedPermutation::flip(n, static_cast<int>(odd - children.begin()));
  } else {
    // Every vertex has even out-degree. A deepest non-root vertex is a leaf,
    // and its parent has at least two children, all of them leaves.
    int deepest = -1, best = -1;
    for (int v = 0; v < n; ++v) {
      int depth = 0;
      for (int x = v; f.parent(x) != no_parent; x = f.parent(x))
        ++depth;
      if (depth > best) {
        best = depth;
        deepest = v;
      }
    }
    int r = f.parent(deepest);
    int other = -1;
    for (int v = 0; v < n; ++v)
      if (v != deepest && f.parent(v) == r && children[static_cast<std::size_t>(v)] == 0) {
        other = v;
        break;
      }
    if (r == no_parent || other < 0)
      throw ConsistencyError("find_negating_involution: no sibling leaves in " + f.dump());
    omega = SignedPermutation::transposition(n, deepest, other);
  }

  if (!(omega * omega == SignedPermutation::identity(n)))
    throw ConsistencyError("find_negating_involution: not an involution");
  auto image = act(omega, f);
  if (image.forest != f || image.coeff != -1)
    throw ConsistencyError("find_negating_involution: does not negate " + f.dump());
  return omega;
}

BigInt trivial_multiplicity(int n, int k, GroupKind kind, Limits const &limits,
                            int threads)
{
  ConjClassTable classes = class_table(kind, n, limits);
  ClassFunction chi = cohomology_character(kind, n, k, limits, TraceMethod::automatic,
                                           threads);
  ClassFunction one{kind, n, std::vector<Rational>(classes.size(), Rational(1))};
  Rational m = inner_product(classes, chi, one);
  if (!is_integer(m) || m < 0)
    throw ConsistencyError("trivial multiplicity " + m.get_str() + " for n=" +
                           std::to_string(n) + " k=" + std::to_string(k));
  return m.get_num();
}

ForestVector symmetrize(RootedForest const &f)
{
  int n = f.rank();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  ForestVector out;
  do {
    auto image = act(SignedPermutation::from_perm(perm), f);
    out[image.forest] += image.coeff;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(out, [](auto const &kv) { return kv.second == 0; });
  return out;
}

ForestVector act(SignedPermutation const &g, ForestVector const &v)
{
  ForestVector out;
  for (auto const &[forest, coeff] : v) {
    auto image = act(g, forest);
    out[image.forest] += coeff * image.coeff;
  }
  std::erase_if(out, [](auto const &kv) { return kv.second == 0; });
  return out;
}

} // namespace psigma
