#include "symplat/cli.hpp"

#include "symplat/error.hpp"
#include "symplat/zariski.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <unistd.h>

namespace symplat::cli {

using io::Json;

namespace {

const std::map<Subcommand, std::string>& descriptions() {
  static const std::map<Subcommand, std::string> table{
      {Subcommand::disc, "Discriminant group of a lattice"},
      {Subcommand::dual, "Dual class of a primal vector, or primal lift of a dual one"},
      {Subcommand::reflect, "Reflect a class in a root"},
      {Subcommand::zariski, "Zariski decomposition with verification and denominator audit"},
      {Subcommand::bound, "Effective birationality bound"},
      {Subcommand::moduli_bound, "Birationality bound for a moduli family"},
      {Subcommand::walls, "Wall divisor test, or enumeration of negative classes"},
      {Subcommand::chamber, "Cone membership and chamber signature of a class"},
      {Subcommand::mld, "Log discrepancies and minimal log discrepancies of a table"}};
  return table;
}

const std::map<std::string, Subcommand>& subcommand_table() {
  static const std::map<std::string, Subcommand> table{
      {"disc", Subcommand::disc},       {"dual", Subcommand::dual},
      {"reflect", Subcommand::reflect}, {"zariski", Subcommand::zariski},
      {"bound", Subcommand::bound},     {"moduli-bound", Subcommand::moduli_bound},
      {"walls", Subcommand::walls},     {"chamber", Subcommand::chamber},
      {"mld", Subcommand::mld}};
  return table;
}

long small_long(const Json& j, const char* name) {
  const Integer v = io::integer_from_json(io::field(j, name));
  if (v < std::numeric_limits<long>::min() || v > std::numeric_limits<long>::max()) {
    throw Error(ErrorCode::invalid_argument, std::string(name) + " is out of range");
  }
  return v.convert_to<long>();
}

std::uint64_t small_unsigned(const Json& j, const char* name) {
  const Integer v = io::integer_from_json(io::field(j, name));
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::invalid_argument, std::string(name) + " must be a nonnegative machine integer");
  }
  return v.convert_to<std::uint64_t>();
}

// A framed vector object, or a bare array read as integral primal coordinates.
FramedVector framed(const Json& j) {
  if (j.is_array()) return FramedVector::primal(io::int_vector_from_json(j));
  return io::vector_from_json(j);
}

IntVector integral_primal(const Json& j) {
  const FramedVector v = framed(j);
  if (v.frame() != Frame::primal) throw Error(ErrorCode::frame_mismatch, "expected a primal class");
  if (!v.is_integral()) throw Error(ErrorCode::not_integral, "expected an integral class");
  return v.integral_coords();
}

Json bound_json(const BoundValue& v) {
  if (v.is_exact()) return Json{{"exact", to_string(*v.exact_value)}};
  return Json{{"log10", format_decimal(*v.log10_value)}, {"rel_err", "1e-9"}};
}

Json disc(const Json& input) {
  const auto group = discriminant_group(io::lattice_from_json(input));
  Json factors = Json::array();
  for (const auto& f : group.invariant_factors) factors.push_back(io::small_integer_json(f));
  return Json{{"order", to_string(group.order)}, {"factors", factors}};
}

Json dual(const Json& input) {
  const Lattice lattice = io::lattice_from_json(io::field(input, "lattice"));
  const FramedVector v = framed(io::field(input, "vector"));
  const FramedVector image = v.frame() == Frame::primal ? dual_class(lattice, v) : primal_of_dual(lattice, v);
  Json out{{"vector", io::to_json(image)}};
  if (v.frame() == Frame::primal && v.is_integral() && !v.is_zero()) {
    out["divisibility"] = to_string(divisibility(lattice, v));
    out["primitive"] = is_primitive(lattice, v);
  }
  return out;
}

Json reflect_report(const Json& input) {
  const Lattice lattice = io::lattice_from_json(io::field(input, "lattice"));
  const FramedVector root = framed(io::field(input, "root"));
  const FramedVector x = framed(io::field(input, "x"));
  Json out{{"image", io::to_json(reflect(lattice, root, x))}};
  if (root.frame() == Frame::primal && root.is_integral() && q_eval(lattice, root, root) < 0) {
    out["integral"] = is_integral_reflection(lattice, root.integral_coords());
  } else {
    out["integral"] = nullptr;
  }
  return out;
}

Json zariski(const Json& input, const RunConfig& config) {
  const ConeContext ctx = io::context_from_json(io::field(input, "context"));
  const FramedVector d = framed(io::field(input, "divisor"));
  const Integer card_a = input.contains("card_a") ? io::integer_from_json(input["card_a"])
                                                  : Integer(abs(ctx.lattice().determinant()));
  if (card_a <= 0) throw Error(ErrorCode::invalid_argument, "card_a must be positive");
  const auto dec = zariski_decompose(ctx, d);
  const auto report = verify_decomposition(ctx, d, dec.positive, dec.negative);
  const auto audit = denominator_audit(ctx, dec, card_a, config.exact_threshold);

  Json support = Json::array();
  Json coefficients = Json::array();
  for (std::size_t i = 0; i < dec.support.size(); ++i) {
    support.push_back(dec.support[i]);
    coefficients.push_back(to_string(dec.coefficients[i]));
  }
  return Json{{"positive", io::to_json(dec.positive)},
              {"negative", io::to_json(dec.negative)},
              {"support", support},
              {"coefficients", coefficients},
              {"denominator_lcm", to_string(dec.denominator_lcm)},
              {"verified", report.ok()},
              {"audit",
               {{"card_a", to_string(card_a)},
                {"support_determinant", to_string(audit.support_determinant)},
                {"lcm_divides_determinant", audit.lcm_divides_determinant},
                {"bound_argument", to_string(audit.bound_argument)},
                {"factorial_bound", bound_json(audit.factorial_bound)},
                {"within_bound", audit.within_bound}}}};
}

Json bound(const Json& input, const RunConfig& config) {
  BoundQuery q;
  q.n = small_unsigned(input, "n");
  q.card_a = io::integer_from_json(io::field(input, "card_a"));
  q.rho = small_unsigned(input, "rho");
  return bound_json(birationality_bound(q, config.exact_threshold));
}

Json moduli(const Json& input, const RunConfig& config) {
  const long a = small_long(input, "a");
  const long k = small_long(input, "k");
  const long eps = small_long(input, "eps");
  if (eps != 1 && eps != -1) throw Error(ErrorCode::invalid_argument, "eps must be 1 or -1");
  const std::uint64_t rho = small_unsigned(input, "rho");
  Json out{{"dim", to_string(moduli_dimension(a, k, static_cast<int>(eps)))}};
  out.update(bound_json(moduli_bound(a, k, static_cast<int>(eps), rho, config.exact_threshold)));
  return out;
}

Json verdict_json(const WallVerdict& v) {
  Json out{{"is_wall", v.is_wall}, {"orbit_closed", v.orbit_closed}};
  if (v.witness) {
    out["witness"] = {{"orbit_element", io::to_json(v.witness->orbit_element)},
                      {"wall_index", v.witness->wall_index},
                      {"factor", to_string(v.witness->factor)}};
  } else {
    out["witness"] = nullptr;
  }
  if (v.failed_condition) {
    out["failed"] = *v.failed_condition == WallFailure::negativity ? "negativity" : "no_wall_match";
  } else {
    out["failed"] = nullptr;
  }
  return out;
}

Json walls(const Json& input, const RunConfig& config) {
  const ConeContext ctx = io::context_from_json(io::field(input, "context"));
  if (input.contains("divisor")) {
    return verdict_json(is_wall_divisor(ctx, integral_primal(input["divisor"]), config.budget));
  }
  const Integer square = io::integer_from_json(io::field(input, "square"));
  const bool primitive_only = input.contains("primitive_only") && input["primitive_only"].is_boolean()
                                  ? input["primitive_only"].get<bool>()
                                  : true;
  Json classes = Json::array();
  for (const auto& x : enumerate_negative_classes(ctx, square, Integer(config.pairing_max), primitive_only)) {
    Json entry{{"class", io::to_json(x)}};
    entry.update(verdict_json(is_wall_divisor(ctx, x, config.budget)));
    classes.push_back(entry);
  }
  return Json{{"square", to_string(square)},
              {"pairing_max", std::to_string(config.pairing_max)},
              {"classes", classes}};
}

Json chamber(const Json& input) {
  const ConeContext ctx = io::context_from_json(io::field(input, "context"));
  const FramedVector x = framed(io::field(input, "x"));
  Json signs = Json::array();
  for (int s : chamber_signature(ctx, x)) signs.push_back(s);
  return Json{{"in_positive_cone", in_positive_cone(ctx, x)},
              {"in_fe_chamber", in_fe_chamber(ctx, x)},
              {"signature", signs}};
}

Json mld(const Json& input) {
  const LogPairTable table = io::table_from_json(input);
  Json discrepancies = Json::array();
  for (const auto& row : table.rows()) {
    discrepancies.push_back({{"label", row.label}, {"a", to_string(log_discrepancy(table, row.label))}});
  }
  std::set<std::string> occupied;
  for (const auto& row : table.rows()) occupied.insert(row.center);
  Json at = Json::array();
  for (const auto& c : occupied) at.push_back({{"center", c}, {"mld", io::to_json(mld_at(table, c))}});
  Json along = Json::array();
  for (const auto& z : table.centers()) {
    bool any = false;
    for (const auto& c : table.centers_under(z)) any = any || occupied.contains(c);
    if (any) along.push_back({{"center", z}, {"mld", io::to_json(mld_along(table, z))}});
  }
  Json out{{"complete", table.complete()},
           {"log_discrepancies", discrepancies},
           {"mld_at", at},
           {"mld_along", along}};
  if (input.contains("sequence")) {
    std::vector<Rational> values;
    for (const auto& v : input["sequence"]) values.push_back(io::rational_from_json(v));
    const auto report = check_sequence_acc(values);
    out["sequence"] = {{"stationary", report.stationary},
                       {"stationary_from", report.stationary_from},
                       {"increase_points", report.increase_points},
                       {"decrease_points", report.decrease_points}};
  }
  return out;
}

void render_text(const Json& j, const std::string& indent, const RunConfig& config, std::ostream& out);

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j) {
    if (e.is_array() || e.is_object()) return false;
  }
  return true;
}

void render_text(const Json& j, const std::string& indent, const RunConfig& config, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      out << indent << (config.color ? "\033[1m" + key + "\033[0m" : key) << ":";
      if (is_flat(value)) {
        if (value.is_array()) {
          for (const auto& e : value) out << ' ' << scalar_text(e);
        } else {
          out << ' ' << scalar_text(value);
        }
        out << '\n';
      } else {
        out << '\n';
        render_text(value, indent + "  ", config, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        out << indent << "-";
        if (e.is_array()) {
          for (const auto& x : e) out << ' ' << scalar_text(x);
        } else {
          out << ' ' << scalar_text(e);
        }
        out << '\n';
      } else {
        out << indent << "-\n";
        render_text(e, indent + "  ", config, out);
      }
    }
  } else {
    out << indent << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string_view subcommand_name(Subcommand s) {
  for (const auto& [name, value] : subcommand_table()) {
    if (value == s) return name;
  }
  return "";
}

Json execute(Subcommand subcommand, const Json& input, const RunConfig& config) {
  switch (subcommand) {
    case Subcommand::disc: return disc(input);
    case Subcommand::dual: return dual(input);
    case Subcommand::reflect: return reflect_report(input);
    case Subcommand::zariski: return zariski(input, config);
    case Subcommand::bound: return bound(input, config);
    case Subcommand::moduli_bound: return moduli(input, config);
    case Subcommand::walls: return walls(input, config);
    case Subcommand::chamber: return chamber(input);
    case Subcommand::mld: return mld(input);
  }
  throw Error(ErrorCode::invalid_argument, "unknown subcommand");
}

std::string render(const Json& report, const RunConfig& config) {
  if (config.format == OutputFormat::json) return report.dump() + "\n";
  std::ostringstream out;
  render_text(report, "", config, out);
  return out.str();
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse:
    case ErrorCode::schema:
    case ErrorCode::io: return 2;
    default: return 1;
  }
}

int run(const RunConfig& config, std::ostream& out) {
  try {
    const Json input = io::parse_json(io::read_input(config.input_path));
    out << render(execute(config.subcommand, input, config), config);
    return 0;
  } catch (const Error& e) {
    out << render(Json{{"error", std::string(e.name())}, {"message", e.what()}}, config);
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    out << render(Json{{"error", std::string(error_name(ErrorCode::schema))}, {"message", e.what()}}, config);
    return 2;
  }
}

const Json& input_schemas() {
  static const Json schemas = Json::parse(R"json({
  "disc": {"type": "object", "required": ["gram"],
           "properties": {"gram": {"$ref": "#/definitions/matrix"}}},
  "dual": {"type": "object", "required": ["lattice", "vector"],
           "properties": {"lattice": {"$ref": "#/definitions/lattice"},
                          "vector": {"$ref": "#/definitions/class"}}},
  "reflect": {"type": "object", "required": ["lattice", "root", "x"],
              "properties": {"lattice": {"$ref": "#/definitions/lattice"},
                             "root": {"$ref": "#/definitions/class"},
                             "x": {"$ref": "#/definitions/class"}}},
  "zariski": {"type": "object", "required": ["context", "divisor"],
              "properties": {"context": {"$ref": "#/definitions/context"},
                             "divisor": {"$ref": "#/definitions/class"},
                             "card_a": {"$ref": "#/definitions/integer"}}},
  "bound": {"type": "object", "required": ["n", "card_a", "rho"],
            "properties": {"n": {"$ref": "#/definitions/integer"},
                           "card_a": {"$ref": "#/definitions/integer"},
                           "rho": {"$ref": "#/definitions/integer"}}},
  "moduli-bound": {"type": "object", "required": ["a", "k", "eps", "rho"],
                   "properties": {"a": {"$ref": "#/definitions/integer"},
                                  "k": {"$ref": "#/definitions/integer"},
                                  "eps": {"enum": [1, -1]},
                                  "rho": {"$ref": "#/definitions/integer"}}},
  "walls": {"type": "object", "required": ["context"],
            "properties": {"context": {"$ref": "#/definitions/context"},
                           "divisor": {"$ref": "#/definitions/vector"},
                           "square": {"$ref": "#/definitions/integer"},
                           "primitive_only": {"type": "boolean"}},
            "oneOf": [{"required": ["divisor"]}, {"required": ["square"]}]},
  "chamber": {"type": "object", "required": ["context", "x"],
              "properties": {"context": {"$ref": "#/definitions/context"},
                             "x": {"$ref": "#/definitions/class"}}},
  "mld": {"type": "object", "required": ["rows"],
          "properties": {
            "rows": {"type": "array", "items": {
              "type": "object", "required": ["label", "kE", "dE", "center"],
              "properties": {"label": {"type": "string"},
                             "kE": {"$ref": "#/definitions/rational"},
                             "dE": {"$ref": "#/definitions/rational"},
                             "center": {"type": "string"}}}},
            "containment": {"type": "array", "items": {
              "type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2}},
            "complete": {"type": "boolean"},
            "sequence": {"type": "array", "items": {"$ref": "#/definitions/rational"}}}},
  "definitions": {
    "integer": {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": "^[+-]?[0-9]+$"}]},
    "rational": {"oneOf": [{"type": "integer"},
                           {"type": "string", "pattern": "^[+-]?[0-9]+(/[0-9]+)?$"}]},
    "vector": {"type": "array", "items": {"$ref": "#/definitions/integer"}},
    "matrix": {"type": "array", "items": {"$ref": "#/definitions/vector"}},
    "lattice": {"type": "object", "required": ["gram"],
                "properties": {"gram": {"$ref": "#/definitions/matrix"}}},
    "class": {"oneOf": [
      {"$ref": "#/definitions/vector"},
      {"type": "object", "required": ["frame", "coords"],
       "properties": {"frame": {"enum": ["primal", "dual"]},
                      "coords": {"type": "array", "items": {"$ref": "#/definitions/rational"}}}}]},
    "context": {"type": "object", "required": ["lattice", "h"],
                "properties": {"lattice": {"$ref": "#/definitions/lattice"},
                               "h": {"$ref": "#/definitions/vector"},
                               "primes": {"type": "array", "items": {"$ref": "#/definitions/vector"}},
                               "walls": {"type": "array", "items": {"$ref": "#/definitions/vector"}},
                               "monodromy_gens": {"type": "array",
                                                  "items": {"$ref": "#/definitions/matrix"}}}}
  }
})json");
  return schemas;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice, cone, bound and discrepancy computations"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  RunConfig config;
  bool schema = false;
  std::string format = "json";
  app.add_flag("--schema", schema, "Print the JSON schemas of all inputs");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", config.budget, "Monodromy orbit budget")->check(CLI::PositiveNumber);
  app.add_option("--pairing-max", config.pairing_max, "Largest q(x, h) enumerated")->check(CLI::PositiveNumber);
  app.add_option("--exact-threshold", config.exact_threshold, "Largest factorial argument computed exactly")
      ->check(CLI::PositiveNumber);

  std::map<CLI::App*, Subcommand> commands;
  for (const auto& [name, value] : subcommand_table()) {
    auto* sub = app.add_subcommand(name, descriptions().at(value));
    sub->add_option("input", config.input_path, "Input JSON file, - for stdin");
    commands[sub] = value;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (schema) {
    out << input_schemas().dump(2) << '\n';
    return 0;
  }
  if (app.get_subcommands().empty()) {
    err << app.help();
    return 2;
  }
  config.subcommand = commands.at(app.get_subcommands().front());
  config.format = format == "text" ? OutputFormat::text : OutputFormat::json;
  config.color = config.format == OutputFormat::text && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return run(config, out);
}

}  // namespace symplat::cli
