#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "psigma/characters.hpp"
#include "psigma/errors.hpp"

namespace psigma {
namespace cache {

namespace {

constexpr std::string_view magic = "psigma-character-table";

std::uint64_t fnv1a(std::string_view text)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v)
{
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

[[noreturn]] void reject(std::string const &why)
{
  throw ConsistencyError("character table cache rejected: " + why);
}

std::string expect_line(std::istringstream &in, std::string_view keyword)
{
  std::string line;
  if (!std::getline(in, line))
    reject("truncated before '" + std::string(keyword) + "'");
  if (line.rfind(keyword, 0) != 0 ||
      (line.size() > keyword.size() && line[keyword.size()] != ' '))
    reject("expected '" + std::string(keyword) + "', got '" + line + "'");
  return line.size() > keyword.size() ? line.substr(keyword.size() + 1) : "";
}

int parse_int(std::string const &text)
{
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (std::exception const &) {
    reject("bad integer '" + text + "'");
  }
  if (used != text.size())
    reject("bad integer '" + text + "'");
  return v;
}

} // namespace

std::string serialize(CharacterTable const &table)
{
  std::ostringstream os;
  os << magic << '\n';
  os << "format-version " << format_version << '\n';
  os << "kind " << to_string(table.kind()) << '\n';
  os << "n " << table.rank() << '\n';
  os << "classes " << table.classes().size() << '\n';
  for (auto const &c : table.classes().classes())
    os << "class " << c.label.str() << '\n';
  os << "irreducibles " << table.size() << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    os << "row " << table.labels()[i].str();
    for (long long v : table.row(i))
      os << ' ' << v;
    os << '\n';
  }
  std::string body = os.str();
  return body + "checksum " + hex(fnv1a(body)) + '\n';
}

CharacterTable deserialize(std::string const &text)
{
  auto tail = text.rfind("checksum ");
  if (tail == std::string::npos)
    reject("missing checksum");
  std::string body = text.substr(0, tail);
  std::string stated = text.substr(tail + 9);
  while (!stated.empty() && (stated.back() == '\n' || stated.back() == '\r'))
    stated.pop_back();
  if (stated != hex(fnv1a(body)))
    reject("checksum mismatch");

  std::istringstream in(body);
  std::string line;
  if (!std::getline(in, line) || line != magic)
    reject("bad magic");
  if (parse_int(expect_line(in, "format-version")) != format_version)
    reject("format version mismatch");
  GroupKind kind;
  try {
    kind = parse_group_kind(expect_line(in, "kind"));
  } catch (ArgumentError const &e) {
    reject(e.what());
  }
  int n = parse_int(expect_line(in, "n"));
  if (n < 0)
    reject("negative rank");

  ConjClassTable classes(kind, n);
  if (static_cast<std::size_t>(parse_int(expect_line(in, "classes"))) != classes.size())
    reject("class count mismatch");
  for (auto const &c : classes.classes())
    if (expect_line(in, "class") != c.label.str())
      reject("class order mismatch at " + c.label.str());

  std::size_t count = static_cast<std::size_t>(parse_int(expect_line(in, "irreducibles")));
  if (count != classes.size())
    reject("irreducible count mismatch");

  std::vector<DoublePartition> labels;
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < count; ++i) {
    std::istringstream row(expect_line(in, "row"));
    std::string label;
    row >> label;
    try {
      labels.push_back(DoublePartition::parse(label));
    } catch (ArgumentError const &e) {
      reject(e.what());
    }
    if (kind == GroupKind::symmetric && !labels.back().minus.empty())
      reject("S_n label with a minus part");
    std::vector<long long> values;
    long long v = 0;
    while (row >> v)
      values.push_back(v);
    if (!row.eof() || values.size() != classes.size())
      reject("malformed row " + label);
    rows.push_back(std::move(values));
  }
  if (std::getline(in, line))
    reject("trailing data");

  CharacterTable table = [&] {
    try {
      return CharacterTable(std::move(classes), std::move(labels), std::move(rows));
    } catch (ConsistencyError const &e) {
      reject(e.what());
    }
  }();
  if (auto failure = table.orthogonality_failure())
    reject(*failure);
  return table;
}

std::filesystem::path path_for(std::filesystem::path const &dir, GroupKind kind,
                               int n)
{
  return dir / ("chartable-v" + std::to_string(format_version) + "-" +
                std::string(to_string(kind)) + "-" + std::to_string(n) + ".txt");
}

CharacterTable load_or_build(std::filesystem::path const &dir, GroupKind kind,
                             int n, Limits const &limits, int threads, bool *loaded)
{
  if (loaded)
    *loaded = false;
  if (n > limits.max_n)
    throw ResourceLimitError("character table: n=" + std::to_string(n) +
                             " exceeds the configured maximum " +
                             std::to_string(limits.max_n));
  if (dir.empty())
    return character_table(kind, n, limits, threads);

  auto path = path_for(dir, kind, n);
  if (std::ifstream in{path, std::ios::binary}) {
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      CharacterTable table = deserialize(buf.str());
      if (table.kind() == kind && table.rank() == n) {
        if (loaded)
          *loaded = true;
        return table;
      }
    } catch (ConsistencyError const &) {
      // fall through and rebuild
    }
  }

  CharacterTable table = character_table(kind, n, limits, threads);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize(table);
  }
  std::filesystem::rename(tmp, path, ec);
  return table;
}

} // namespace cache

TableStore::TableStore(std::filesystem::path cache_dir, Limits limits, int threads)
  : dir_(std::move(cache_dir)), limits_(limits), threads_(threads)
{}

CharacterTable const &TableStore::get(GroupKind kind, int n)
{
  auto key = std::make_pair(kind, n);
  auto it = tables_.find(key);
  if (it == tables_.end())
    it = tables_
           .emplace(key, std::make_unique<CharacterTable>(
                           cache::load_or_build(dir_, kind, n, limits_, threads_)))
           .first;
  return *it->second;
}

} // namespace psigma
