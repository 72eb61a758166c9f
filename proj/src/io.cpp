#include "symplat/io.hpp"

#include "symplat/error.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

namespace symplat::io {

namespace {

[[noreturn]] void schema_error(const std::string& message) { throw Error(ErrorCode::schema, message); }

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  return j;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, e.what());
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const Json& field(const Json& object, const char* name) {
  if (!object.is_object()) schema_error(std::string("expected an object with field '") + name + "'");
  const auto it = object.find(name);
  if (it == object.end()) schema_error(std::string("missing field '") + name + "'");
  return *it;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const Error& e) {
      schema_error(e.what());
    }
  }
  schema_error("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      schema_error(e.what());
    }
  }
  schema_error("expected a rational, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  array(j, "integer vector");
  IntVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = integer_from_json(j[i]);
  return v;
}

IntMatrix int_matrix_from_json(const Json& j) {
  array(j, "matrix");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = rows == 0 ? 0 : static_cast<Index>(array(j[0], "matrix row").size());
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& row = array(j[static_cast<std::size_t>(i)], "matrix row");
    if (static_cast<Index>(row.size()) != cols) schema_error("matrix rows have different lengths");
    for (Index k = 0; k < cols; ++k) m(i, k) = integer_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Lattice lattice_from_json(const Json& j) { return make_lattice(int_matrix_from_json(field(j, "gram"))); }

FramedVector vector_from_json(const Json& j) {
  const auto& frame = field(j, "frame");
  const auto& coords = array(field(j, "coords"), "coords");
  RatVector v(static_cast<Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(coords[i]);
  if (frame == "primal") return FramedVector::primal(v);
  if (frame == "dual") return FramedVector::dual(v);
  schema_error("frame must be \"primal\" or \"dual\"");
}

ConeContext context_from_json(const Json& j) {
  Lattice lattice = lattice_from_json(field(j, "lattice"));
  IntVector h = int_vector_from_json(field(j, "h"));
  std::vector<IntVector> primes, walls;
  std::vector<IntMatrix> gens;
  if (j.contains("primes")) {
    for (const auto& e : array(j["primes"], "primes")) primes.push_back(int_vector_from_json(e));
  }
  if (j.contains("walls")) {
    for (const auto& w : array(j["walls"], "walls")) walls.push_back(int_vector_from_json(w));
  }
  if (j.contains("monodromy_gens")) {
    for (const auto& g : array(j["monodromy_gens"], "monodromy_gens")) gens.push_back(int_matrix_from_json(g));
  }
  for (const auto& g : gens) {
    if (g.rows() != lattice.rank() || g.cols() != lattice.rank()) {
      throw Error(ErrorCode::length_mismatch, "monodromy generator has the wrong size");
    }
  }
  return make_cone_context(std::move(lattice), std::move(h), std::move(primes), std::move(walls),
                           std::move(gens));
}

LogPairTable table_from_json(const Json& j) {
  std::vector<LogPairRow> rows;
  for (const auto& r : array(field(j, "rows"), "rows")) {
    const auto& label = field(r, "label");
    const auto& center = field(r, "center");
    if (!label.is_string() || !center.is_string()) schema_error("row label and center must be strings");
    rows.push_back({label.get<std::string>(), rational_from_json(field(r, "kE")),
                    rational_from_json(field(r, "dE")), center.get<std::string>()});
  }
  std::vector<Containment> containment;
  if (j.contains("containment")) {
    for (const auto& pair : array(j["containment"], "containment")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        schema_error("containment entries must be pairs of center labels");
      }
      containment.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  bool complete = false;
  if (j.contains("complete")) {
    if (!j["complete"].is_boolean()) schema_error("complete must be a boolean");
    complete = j["complete"].get<bool>();
  }
  return LogPairTable(std::move(rows), containment, complete);
}

Json to_json(const Integer& a) { return to_string(a); }
Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json to_json(const FramedVector& v) {
  Json coords = Json::array();
  for (Index i = 0; i < v.coords().size(); ++i) coords.push_back(to_string(v.coords()(i)));
  return Json{{"frame", std::string(frame_name(v.frame()))}, {"coords", coords}};
}

Json to_json(const MldValue& v) { return to_string(v); }

Json small_integer_json(const Integer& a) {
  if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max()) {
    return a.convert_to<std::int64_t>();
  }
  return to_string(a);
}

}  // namespace symplat::io
