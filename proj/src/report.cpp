#include "psigma/report.hpp"

#include <iomanip>
#include <sstream>

#include "psigma/errors.hpp"

namespace psigma {

namespace {

Json big_to_json(BigInt const &v)
{
  if (v.fits_slong_p())
    return static_cast<long long>(v.get_si());
  return v.get_str();
}

BigInt big_from_json(Json const &j)
{
  if (j.is_number_integer())
    return BigInt(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (std::invalid_argument const &) {
      throw ArgumentError("bad integer '" + j.get<std::string>() + "'");
    }
  }
  throw ArgumentError("expected an integer");
}

template <typename T>
T field(Json const &j, char const *key)
{
  if (!j.is_object() || !j.contains(key))
    throw ArgumentError(std::string("report: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (nlohmann::json::exception const &e) {
    throw ArgumentError(std::string("report: bad field '") + key + "': " + e.what());
  }
}

Json const &member(Json const &j, char const *key)
{
  if (!j.is_object() || !j.contains(key))
    throw ArgumentError(std::string("report: missing field '") + key + "'");
  return j.at(key);
}

} // namespace

Json to_json(MultiplicityVector const &v)
{
  Json entries = Json::array();
  for (auto const &e : v.entries) {
    Json item;
    item["name"] = e.name.str();
    item["multiplicity"] = e.multiplicity;
    item["padded_dim"] = big_to_json(e.padded_dim);
    if (e.raw)
      item["raw"] = true;
    entries.push_back(std::move(item));
  }
  Json j;
  j["kind"] = std::string(to_string(v.kind));
  j["n"] = v.n;
  j["k"] = v.k;
  j["entries"] = std::move(entries);
  j["stable_from"] = nullptr;
  return j;
}

MultiplicityVector multiplicity_vector_from_json(Json const &j)
{
  MultiplicityVector v;
  v.kind = parse_group_kind(field<std::string>(j, "kind"));
  v.n = field<int>(j, "n");
  v.k = field<int>(j, "k");
  Json const &entries = member(j, "entries");
  if (!entries.is_array())
    throw ArgumentError("report: entries must be an array");
  for (auto const &item : entries) {
    MultiplicityEntry e;
    e.name = StableName::parse(v.kind, field<std::string>(item, "name"));
    e.multiplicity = field<long long>(item, "multiplicity");
    e.padded_dim = big_from_json(member(item, "padded_dim"));
    e.raw = item.contains("raw") && field<bool>(item, "raw");
    v.entries.push_back(std::move(e));
  }
  return v;
}

Json to_json(StabilityReport const &r)
{
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  j["k"] = r.k;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["bound"] = r.bound;
  j["stable_from"] = r.stable_from ? Json(*r.stable_from) : Json(nullptr);
  j["provisional"] = r.provisional;
  j["violation"] = r.violation;
  Json vectors = Json::array();
  for (auto const &v : r.vectors)
    vectors.push_back(to_json(v));
  j["vectors"] = std::move(vectors);
  return j;
}

StabilityReport stability_report_from_json(Json const &j)
{
  StabilityReport r;
  r.kind = parse_group_kind(field<std::string>(j, "kind"));
  r.k = field<int>(j, "k");
  r.n_min = field<int>(j, "n_min");
  r.n_max = field<int>(j, "n_max");
  r.bound = field<int>(j, "bound");
  if (!member(j, "stable_from").is_null())
    r.stable_from = field<int>(j, "stable_from");
  r.provisional = field<bool>(j, "provisional");
  r.violation = field<bool>(j, "violation");
  Json const &vectors = member(j, "vectors");
  if (!vectors.is_array())
    throw ArgumentError("report: vectors must be an array");
  for (auto const &v : vectors)
    r.vectors.push_back(multiplicity_vector_from_json(v));
  return r;
}

std::string summary_line(MultiplicityVector const &v)
{
  if (v.entries.empty())
    return "0";
  std::string out;
  for (auto const &e : v.entries) {
    if (!out.empty())
      out += " + ";
    out += e.name.str();
    if (e.multiplicity != 1)
      out += "^" + std::to_string(e.multiplicity);
  }
  return out;
}

std::string text_table(MultiplicityVector const &v)
{
  std::ostringstream os;
  os << "H^" << v.k << " as " << to_string(v.kind) << " representation, n=" << v.n
     << '\n';
  os << std::left << std::setw(24) << "summand" << std::right << std::setw(6)
     << "mult" << std::setw(12) << "dim" << '\n';
  for (auto const &e : v.entries)
    os << std::left << std::setw(24) << (e.name.str() + (e.raw ? " (raw)" : ""))
       << std::right << std::setw(6) << e.multiplicity << std::setw(12)
       << e.padded_dim.get_str() << '\n';
  os << "total dimension " << v.total_dimension().get_str() << '\n';
  return os.str();
}

std::string text_report(StabilityReport const &r)
{
  std::ostringstream os;
  os << "stability of H^" << r.k << " for " << to_string(r.kind) << ", n=" << r.n_min
     << ".." << r.n_max << '\n';
  for (auto const &v : r.vectors)
    os << "  n=" << v.n << ": " << summary_line(v) << '\n';
  os << "stable_from ";
  if (r.stable_from)
    os << *r.stable_from;
  else
    os << "none";
  os << " (bound " << r.bound << ")";
  if (r.provisional)
    os << " provisional";
  if (r.violation)
    os << " VIOLATION";
  os << '\n';
  return os.str();
}

} // namespace psigma
