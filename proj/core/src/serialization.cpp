#include "fqg/serialization.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fqg/error.hpp"

namespace fqg {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + why);
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

void check_version(const Json& j) {
  if (!j.contains("format_version")) parse_fail("format_version", "missing");
  if (!j["format_version"].is_number_integer()) parse_fail("format_version", "must be an integer");
  const int v = j["format_version"].get<int>();
  if (v != kFormatVersion) {
    throw Error(ErrorCode::SchemaVersionMismatch,
                "format_version " + std::to_string(v) + " is not supported (expected " +
                    std::to_string(kFormatVersion) + ")");
  }
}

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || item.key() == k;
    if (!known) parse_fail(item.key(), "unknown field in " + where);
  }
}

/// Reads an entry list of `arity` indices followed by (re, im), checking
/// every index against `n`.
std::vector<std::pair<std::vector<Index>, Complex>> entries(const Json& j, const std::string& field,
                                                            std::size_t arity, Index n) {
  if (!j.is_array()) parse_fail(field, "must be an array of entries");
  std::vector<std::pair<std::vector<Index>, Complex>> out;
  std::set<std::vector<Index>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const Json& row = j[e];
    const std::string where = "entry " + std::to_string(e);
    if (!row.is_array() || row.size() != arity + 2) {
      parse_fail(field, where + " must have " + std::to_string(arity) + " indices followed by re, im");
    }
    std::vector<Index> idx;
    for (std::size_t t = 0; t < arity; ++t) {
      if (!row[t].is_number_integer()) parse_fail(field, where + " has a non-integer index");
      const Index v = row[t].get<Index>();
      if (v < 0 || v >= n) parse_fail(field, where + " index " + std::to_string(v) + " out of range");
      idx.push_back(v);
    }
    if (!row[arity].is_number() || !row[arity + 1].is_number()) {
      parse_fail(field, where + " has a non-numeric value");
    }
    if (!seen.insert(idx).second) parse_fail(field, where + " duplicates an earlier entry");
    out.emplace_back(std::move(idx), Complex(row[arity].get<double>(), row[arity + 1].get<double>()));
  }
  return out;
}

Json complex_entry(std::initializer_list<Index> idx, Complex v) {
  Json row = Json::array();
  for (Index i : idx) row.push_back(i);
  row.push_back(v.real());
  row.push_back(v.imag());
  return row;
}

CayleyTable cayley_from(const Json& j) {
  std::vector<std::string> labels;
  const Json* table = &j;
  if (j.is_object()) {
    check_version(j);
    reject_unknown(j, {"format_version", "name", "labels", "table"}, "group");
    if (!j.contains("table")) parse_fail("table", "missing");
    table = &j["table"];
    if (j.contains("labels")) {
      if (!j["labels"].is_array()) parse_fail("labels", "must be an array of strings");
      for (const auto& l : j["labels"]) {
        if (!l.is_string()) parse_fail("labels", "must be an array of strings");
        labels.push_back(l.get<std::string>());
      }
    }
  }
  if (!table->is_array()) parse_fail("table", "must be an array of rows");
  std::vector<std::vector<Index>> rows;
  for (const auto& r : *table) {
    if (!r.is_array()) parse_fail("table", "rows must be arrays of integers");
    std::vector<Index> row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) parse_fail("table", "entries must be integers");
      row.push_back(v.get<Index>());
    }
    rows.push_back(std::move(row));
  }
  return CayleyTable(std::move(rows), std::move(labels));
}

std::vector<SparseEntries> automorphism_list(const Json& j) {
  if (!j.is_array()) parse_fail("automorphisms", "must be a preset name or an array of matrices");
  std::vector<SparseEntries> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string field = "automorphisms[" + std::to_string(k) + "]";
    if (!j[k].is_array()) parse_fail(field, "must be an array of [i,j,re,im] entries");
    SparseEntries m;
    for (const auto& row : j[k]) {
      if (!row.is_array() || row.size() != 4 || !row[0].is_number_integer() || !row[1].is_number_integer() ||
          !row[2].is_number() || !row[3].is_number()) {
        parse_fail(field, "entries must be [i,j,re,im]");
      }
      m.emplace_back(row[0].get<Index>(), row[1].get<Index>(), Complex(row[2].get<double>(), row[3].get<double>()));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

FiniteHopfStarAlgebra algebra_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "algebra file must hold a JSON object");
  check_version(j);
  reject_unknown(j, {"format_version", "name", "dim", "basis", "mult", "comult", "unit", "counit", "antipode", "star"},
                 "algebra");
  for (const char* f : {"dim", "mult", "comult", "unit", "counit", "antipode", "star"}) {
    if (!j.contains(f)) parse_fail(f, "missing");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<Index>() < 1) parse_fail("dim", "must be a positive integer");
  const Index n = j["dim"].get<Index>();
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "algebra";
  std::vector<std::string> basis;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || static_cast<Index>(j["basis"].size()) != n) {
      parse_fail("basis", "must be an array of " + std::to_string(n) + " strings");
    }
    for (const auto& b : j["basis"]) {
      if (!b.is_string()) parse_fail("basis", "must contain strings");
      basis.push_back(b.get<std::string>());
    }
  }

  Matrix mult = Matrix::Zero(n, n * n);
  for (const auto& [idx, v] : entries(j["mult"], "mult", 3, n)) mult(idx[2], idx[0] * n + idx[1]) = v;
  Matrix comult = Matrix::Zero(n * n, n);
  for (const auto& [idx, v] : entries(j["comult"], "comult", 3, n)) comult(idx[1] * n + idx[2], idx[0]) = v;
  Vector unit = Vector::Zero(n);
  for (const auto& [idx, v] : entries(j["unit"], "unit", 1, n)) unit(idx[0]) = v;
  RowVector counit = RowVector::Zero(n);
  for (const auto& [idx, v] : entries(j["counit"], "counit", 1, n)) counit(idx[0]) = v;
  Matrix antipode = Matrix::Zero(n, n);
  for (const auto& [idx, v] : entries(j["antipode"], "antipode", 2, n)) antipode(idx[1], idx[0]) = v;
  Matrix star = Matrix::Zero(n, n);
  for (const auto& [idx, v] : entries(j["star"], "star", 2, n)) star(idx[1], idx[0]) = v;

  return FiniteHopfStarAlgebra(name, std::move(basis), std::move(mult), std::move(comult), std::move(unit),
                               std::move(counit), std::move(antipode), std::move(star));
}

std::string algebra_to_json(const FiniteHopfStarAlgebra& a) {
  const Index n = a.dim();
  const Complex zero(0.0);
  Json j;
  j["format_version"] = kFormatVersion;
  j["name"] = a.name();
  j["dim"] = n;
  j["basis"] = a.basis_labels();
  Json mult = Json::array(), comult = Json::array(), unit = Json::array(), counit = Json::array(),
       antipode = Json::array(), star = Json::array();
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      for (Index l = 0; l < n; ++l) {
        if (a.mult()(l, i * n + k) != zero) mult.push_back(complex_entry({i, k, l}, a.mult()(l, i * n + k)));
        if (a.comult()(k * n + l, i) != zero) comult.push_back(complex_entry({i, k, l}, a.comult()(k * n + l, i)));
      }
      if (a.antipode()(k, i) != zero) antipode.push_back(complex_entry({i, k}, a.antipode()(k, i)));
      if (a.star()(k, i) != zero) star.push_back(complex_entry({i, k}, a.star()(k, i)));
    }
    if (a.unit()(i) != zero) unit.push_back(complex_entry({i}, a.unit()(i)));
    if (a.counit()(i) != zero) counit.push_back(complex_entry({i}, a.counit()(i)));
  }
  j["mult"] = std::move(mult);
  j["comult"] = std::move(comult);
  j["unit"] = std::move(unit);
  j["counit"] = std::move(counit);
  j["antipode"] = std::move(antipode);
  j["star"] = std::move(star);

  // one sparse entry per line keeps files diff-friendly
  std::ostringstream out;
  out << "{\n";
  bool first = true;
  for (const auto& item : j.items()) {
    if (!first) out << ",\n";
    first = false;
    out << "  " << Json(item.key()).dump() << ": ";
    const Json& v = item.value();
    if (v.is_array() && !v.empty() && v.front().is_array()) {
      out << "[\n";
      for (std::size_t e = 0; e < v.size(); ++e) out << "    " << v[e].dump() << (e + 1 < v.size() ? ",\n" : "\n");
      out << "  ]";
    } else {
      out << v.dump();
    }
  }
  out << "\n}";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteHopfStarAlgebra load_algebra(const std::filesystem::path& path) {
  return algebra_from_json(read_text_file(path));
}

void save_algebra(const FiniteHopfStarAlgebra& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << algebra_to_json(a) << '\n';
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

CayleyTable cayley_from_json(const std::string& text) { return cayley_from(parse(text)); }

ActionSpec action_spec_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "action spec must hold a JSON object");
  check_version(j);
  reject_unknown(j, {"format_version", "algebra", "group", "automorphisms"}, "action spec");
  for (const char* f : {"algebra", "group", "automorphisms"}) {
    if (!j.contains(f)) parse_fail(f, "missing");
  }
  if (!j["algebra"].is_string()) parse_fail("algebra", "must be a preset name or path");
  ActionSpec spec{j["algebra"].get<std::string>(), std::string(), std::string()};
  if (j["group"].is_string()) {
    spec.group = j["group"].get<std::string>();
  } else {
    spec.group = cayley_from(j["group"]);
  }
  if (j["automorphisms"].is_string()) {
    spec.automorphisms = j["automorphisms"].get<std::string>();
  } else {
    spec.automorphisms = automorphism_list(j["automorphisms"]);
  }
  return spec;
}

std::vector<SparseEntries> automorphisms_from_json(const std::string& text) {
  const Json j = parse(text);
  if (j.is_object()) {
    check_version(j);
    reject_unknown(j, {"format_version", "automorphisms"}, "automorphism file");
    if (!j.contains("automorphisms")) parse_fail("automorphisms", "missing");
    return automorphism_list(j["automorphisms"]);
  }
  return automorphism_list(j);
}

std::vector<Matrix> materialize(const std::vector<SparseEntries>& entries, Index n) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    Matrix m = Matrix::Zero(n, n);
    for (const auto& [i, jj, v] : entries[k]) {
      if (i < 0 || i >= n || jj < 0 || jj >= n) {
        parse_fail("automorphisms[" + std::to_string(k) + "]", "index out of range for dimension " + std::to_string(n));
      }
      m(jj, i) = v;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << hash;
  return ss.str();
}

}  // namespace fqg
