#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "psigma/acceptance.hpp"
#include "psigma/decomposition.hpp"
#include "psigma/errors.hpp"
#include "psigma/forest.hpp"
#include "psigma/group_action.hpp"
#include "psigma/parallel.hpp"
#include "psigma/presentation_oracle.hpp"
#include "psigma/report.hpp"

using namespace psigma;

namespace {

enum Exit { ok = 0, failed = 1, argument = 2, resource = 3, consistency = 4 };

// Largest n for which `dim` also enumerates.
constexpr int enumeration_cap = 9;

struct Config {
  int n = -1;
  int k = -1;
  int n_max = -1;
  std::string group = "Sn";
  std::string format = "text";
  std::string cache_dir;
  int threads = default_thread_count();
  int max_n = -1;
  int oracle_max_n = Limits{}.oracle_max_n;
  int oracle_max_k = Limits{}.oracle_max_k;
};

GroupKind kind_of(Config const &c) { return parse_group_kind(c.group); }

int group_cap(Config const &c)
{
  if (c.max_n >= 0)
    return c.max_n;
  return kind_of(c) == GroupKind::hyperoctahedral ? 8 : 9;
}

Limits limits_of(Config const &c)
{
  Limits l;
  if (c.max_n >= 0)
    l.max_n = c.max_n;
  l.oracle_max_n = c.oracle_max_n;
  l.oracle_max_k = c.oracle_max_k;
  return l;
}

std::string cache_dir_of(Config const &c)
{
  if (!c.cache_dir.empty())
    return c.cache_dir;
  char const *env = std::getenv("PSIGMA_CACHE_DIR");
  return env ? env : "";
}

void require(bool condition, std::string const &message)
{
  if (!condition)
    throw ArgumentError(message);
}

void require_n(Config const &c)
{
  require(c.n >= 1, "-n must be given and positive");
}

void require_k(Config const &c)
{
  require(c.k >= 0, "-k must be given and non-negative");
}

void cap_n(Config const &c, int n)
{
  if (n > group_cap(c))
    throw ResourceLimitError("n=" + std::to_string(n) + " exceeds the cap " +
                             std::to_string(group_cap(c)) + " for " + c.group +
                             " (raise it with --max-n)");
}

bool json(Config const &c) { return c.format == "json"; }

int cmd_dim(Config const &c)
{
  require_n(c);
  require_k(c);
  BigInt formula = forest_count(c.n, c.k);
  int cap = c.max_n >= 0 ? std::min(c.max_n, enumeration_cap) : enumeration_cap;
  std::optional<std::uint64_t> counted;
  if (c.n <= cap)
    counted = count_forests(c.n, c.k);
  bool match = counted && BigInt(static_cast<unsigned long>(*counted)) == formula;
  if (json(c)) {
    Json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["dimension"] = formula.get_str();
    j["enumerated"] = counted ? Json(*counted) : Json(nullptr);
    j["match"] = counted ? Json(match) : Json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << formula.get_str();
    if (counted)
      std::cout << ", enumerated " << *counted << ", " << (match ? "match" : "MISMATCH");
    else
      std::cout << " (formula only: n above the enumeration cap " << cap << ")";
    std::cout << '\n';
  }
  return counted && !match ? consistency : ok;
}

int cmd_decompose(Config const &c)
{
  require_n(c);
  require_k(c);
  cap_n(c, c.n);
  TableStore tables(cache_dir_of(c), limits_of(c), c.threads);
  MultiplicityVector v = decompose(c.n, c.k, kind_of(c), tables);
  if (json(c)) {
    std::cout << to_json(v).dump(2) << '\n';
  } else {
    std::cout << text_table(v);
    std::cout << "dimension identity: " << v.total_dimension().get_str()
              << " = forest count, ok\n";
  }
  return ok;
}

int cmd_stability(Config const &c)
{
  require_k(c);
  int n_max = c.n_max >= 0 ? c.n_max : group_cap(c);
  cap_n(c, n_max);
  TableStore tables(cache_dir_of(c), limits_of(c), c.threads);
  StabilityReport r = stability_scan(c.k, kind_of(c), n_max, tables);
  if (json(c))
    std::cout << to_json(r).dump(2) << '\n';
  else
    std::cout << text_report(r);
  return ok;
}

int cmd_invariants(Config const &c)
{
  require_n(c);
  require_k(c);
  cap_n(c, c.n);
  BigInt m = trivial_multiplicity(c.n, c.k, kind_of(c), limits_of(c), c.threads);
  if (json(c)) {
    Json j;
    j["kind"] = c.group;
    j["n"] = c.n;
    j["k"] = c.k;
    j["trivial_multiplicity"] = m.get_str();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "trivial multiplicity of H^" << c.k << " for " << c.group
              << ", n=" << c.n << ": " << m.get_str() << '\n';
  }
  return ok;
}

int cmd_oracle(Config const &c)
{
  require_n(c);
  require_k(c);
  Limits limits = limits_of(c);
  if (c.n > limits.oracle_max_n || c.k > limits.oracle_max_k)
    throw ResourceLimitError("oracle: (n,k)=(" + std::to_string(c.n) + "," +
                             std::to_string(c.k) + ") exceeds the cap (" +
                             std::to_string(limits.oracle_max_n) + "," +
                             std::to_string(limits.oracle_max_k) + ")");
  auto report = oracle::quotient_rank_report(c.n, c.k, limits);
  bool basis = oracle::verify_forest_basis(c.n, c.k, limits);
  BigInt formula = forest_count(c.n, c.k);
  bool match = BigInt(static_cast<unsigned long>(report.quotient)) == formula;
  if (json(c)) {
    Json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["monomials"] = report.monomials;
    j["relation_rank"] = report.relations.exact;
    j["modular_agreed"] = report.relations.modular_agreed;
    j["quotient"] = report.quotient;
    j["forest_count"] = formula.get_str();
    j["match"] = match;
    j["forest_basis"] = basis;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "monomials " << report.monomials << ", relation rank "
              << report.relations.exact << ", quotient " << report.quotient
              << ", forest count " << formula.get_str() << (match ? " (match)" : " (MISMATCH)")
              << "\nforest basis " << (basis ? "verified" : "FAILED") << '\n';
  }
  return match && basis ? ok : consistency;
}

int cmd_character(Config const &c)
{
  require_n(c);
  require_k(c);
  cap_n(c, c.n);
  Limits limits = limits_of(c);
  GroupKind kind = kind_of(c);
  ConjClassTable classes = class_table(kind, c.n, limits);
  ClassFunction chi = cohomology_character(kind, c.n, c.k, limits,
                                           TraceMethod::automatic, c.threads);
  if (json(c)) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < classes.size(); ++i)
      rows.push_back({{"class", classes[i].label.str()},
                      {"size", classes[i].size.get_str()},
                      {"value", chi[i].get_str()}});
    Json j;
    j["kind"] = c.group;
    j["n"] = c.n;
    j["k"] = c.k;
    j["classes"] = std::move(rows);
    std::cout << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < classes.size(); ++i)
      std::cout << classes[i].label.str() << '\t' << chi[i].get_str() << '\n';
  }
  return ok;
}

int cmd_verify(Config const &c)
{
  TableStore tables(cache_dir_of(c), limits_of(c), c.threads);
  int failures = 0;
  Json lines = Json::array();
  acceptance::run_all(tables, [&](acceptance::CriterionResult const &r) {
    if (!r.passed)
      ++failures;
    if (json(c))
      lines.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                       {"detail", r.detail}});
    else
      std::cout << acceptance::format_line(r) << std::endl;
  });
  if (json(c))
    std::cout << Json{{"criteria", lines}, {"failed", failures}}.dump(2) << '\n';
  else
    std::cout << (acceptance::criterion_count - failures) << "/"
              << acceptance::criterion_count << " criteria passed\n";
  return failures == 0 ? ok : consistency;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Cohomology of the pure string motion group as W_n and S_n "
               "representations"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache-dir", c.cache_dir,
                    "character table cache (default: $PSIGMA_CACHE_DIR)");
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-n", c.max_n, "cap on n");
  };
  auto add_group = [&](CLI::App *sub) {
    sub->add_option("-g,--group", c.group, "Sn or Wn")
      ->check(CLI::IsMember({"Sn", "Wn"}));
  };

  auto *dim = app.add_subcommand("dim", "dimension of H^k");
  dim->add_option("-n", c.n)->required();
  dim->add_option("-k", c.k)->required();
  add_common(dim);

  auto *dec = app.add_subcommand("decompose", "decomposition into irreducibles");
  dec->add_option("-n", c.n)->required();
  dec->add_option("-k", c.k)->required();
  add_group(dec);
  add_common(dec);

  auto *stab = app.add_subcommand("stability", "scan n for stabilization");
  stab->add_option("-k", c.k)->required();
  stab->add_option("-N", c.n_max, "largest n scanned");
  add_group(stab);
  add_common(stab);

  auto *inv = app.add_subcommand("invariants", "multiplicity of the trivial representation");
  inv->add_option("-n", c.n)->required();
  inv->add_option("-k", c.k)->required();
  add_group(inv);
  add_common(inv);

  auto *orc = app.add_subcommand("oracle", "rank and basis checks in the presented algebra");
  orc->add_option("-n", c.n)->required();
  orc->add_option("-k", c.k)->required();
  orc->add_option("--oracle-max-n", c.oracle_max_n);
  orc->add_option("--oracle-max-k", c.oracle_max_k);
  add_common(orc);

  auto *ver = app.add_subcommand("verify-paper", "run every acceptance check");
  add_common(ver);

  auto *chr = app.add_subcommand("character", "character of H^k per class");
  chr->add_option("-n", c.n)->required();
  chr->add_option("-k", c.k)->required();
  add_group(chr);
  add_common(chr);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) == 0 ? ok : argument;
  }

  try {
    if (*dim)
      return cmd_dim(c);
    if (*dec)
      return cmd_decompose(c);
    if (*stab)
      return cmd_stability(c);
    if (*inv)
      return cmd_invariants(c);
    if (*orc)
      return cmd_oracle(c);
    if (*ver)
      return cmd_verify(c);
    if (*chr)
      return cmd_character(c);
  } catch (ArgumentError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return argument;
  } catch (ResourceLimitError const &e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return resource;
  } catch (ConsistencyError const &e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return consistency;
  } catch (CyclicProductError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return argument;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return failed;
  }
  return failed;
}
