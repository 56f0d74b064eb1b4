#include "hodgekit/json_io.hpp"

#include <charconv>

#include "hodgekit/errors.hpp"

namespace hodgekit {

namespace {

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char ch : key) {
    if (ch == '~') escaped += "~0";
    else if (ch == '/') escaped += "~1";
    else escaped += ch;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const json& require(const json& j, const char* key, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer.empty() ? "/" : pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(pointer, key), "missing required key");
  return *it;
}

int parse_int(const std::string& text, const std::string& pointer) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw SchemaError(pointer, "expected an integer, got '" + text + "'");
  return value;
}

std::size_t count_from_json(const json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(pointer, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Bidegree bidegree_from_key(const std::string& key, const std::string& pointer) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw SchemaError(pointer, "expected a key of the form \"p,q\"");
  return {parse_int(key.substr(0, comma), pointer), parse_int(key.substr(comma + 1), pointer)};
}

}  // namespace

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j, const std::string& pointer) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(pointer, e.what());
  }
  throw SchemaError(pointer, "expected a rational string \"a/b\"");
}

json scalar_to_json(const GaussianRational& x) {
  return {{"re", rational_to_json(x.re())}, {"im", rational_to_json(x.im())}};
}

GaussianRational scalar_from_json(const json& j, const std::string& pointer) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      if (key != "re" && key != "im") throw SchemaError(child(pointer, key), "unexpected key in scalar");
    return {rational_from_json(require(j, "re", pointer), child(pointer, "re")),
            rational_from_json(require(j, "im", pointer), child(pointer, "im"))};
  }
  return rational_from_json(j, pointer);
}

json matrix_to_json(const QiMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QiMatrix matrix_from_json(const json& j, std::size_t cols, const std::string& pointer) {
  if (!j.is_array()) throw SchemaError(pointer, "expected an array of rows");
  std::vector<QiVector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    const std::string row_ptr = child(pointer, r);
    if (!row.is_array()) throw SchemaError(row_ptr, "expected a row array");
    if (row.size() != cols)
      throw SchemaError(row_ptr, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    QiVector values;
    for (std::size_t c = 0; c < row.size(); ++c) values.push_back(scalar_from_json(row[c], child(row_ptr, c)));
    rows.push_back(std::move(values));
  }
  return QiMatrix::from_rows(rows, cols);
}

json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis().transpose()); }

Subspace subspace_from_json(const json& j, std::size_t ambient_dim, const std::string& pointer) {
  return Subspace::span(matrix_from_json(j, ambient_dim, pointer).transpose());
}

json to_json(const HodgeDecomposition& d) {
  json blocks = json::object();
  for (const auto& [key, block] : d.blocks) blocks[to_string(key)] = subspace_to_json(block);
  return {{"kind", "decomposition"}, {"weight", d.weight}, {"rank", d.rank}, {"blocks", blocks}};
}

json to_json(const HodgeFiltration& f) {
  json steps = json::object();
  for (std::size_t k = 0; k < f.steps.size(); ++k)
    steps[std::to_string(f.p_min + static_cast<int>(k))] = subspace_to_json(f.steps[k]);
  return {{"kind", "filtration"}, {"weight", f.weight}, {"rank", f.rank}, {"steps", steps}};
}

json to_json(const HodgeRepresentation& r) {
  json coefficients = json::object();
  for (const auto& [key, c] : r.coefficients) coefficients[to_string(key)] = matrix_to_json(c);
  json weight = r.weight ? json(*r.weight) : json("mixed");
  return {{"kind", "representation"}, {"weight", weight}, {"rank", r.rank}, {"coefficients", coefficients}};
}

json to_json(const AnyStructure& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

json to_json(const GeneralHodgeStructure& g) {
  json components = json::object();
  for (const auto& [k, d] : g.components) components[std::to_string(k)] = to_json(d);
  return {{"kind", "general"}, {"rank", g.rank()}, {"components", components}};
}

AnyStructure structure_from_json(const json& j) {
  const json& kind_j = require(j, "kind", "");
  if (!kind_j.is_string()) throw SchemaError("/kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  const std::size_t rank = count_from_json(require(j, "rank", ""), "/rank");
  const json& weight_j = require(j, "weight", "");
  std::optional<int> weight;
  if (weight_j.is_string() && weight_j.get<std::string>() == "mixed") {
    if (kind != "representation") throw SchemaError("/weight", "only representations may be \"mixed\"");
  } else if (weight_j.is_number_integer()) {
    weight = weight_j.get<int>();
  } else {
    throw SchemaError("/weight", "expected an integer or \"mixed\"");
  }

  if (kind == "decomposition") {
    const json& blocks = require(j, "blocks", "");
    if (!blocks.is_object()) throw SchemaError("/blocks", "expected an object keyed by \"p,q\"");
    HodgeDecomposition d{*weight, rank, {}};
    for (const auto& [key, value] : blocks.items()) {
      const std::string ptr = child("/blocks", key);
      Bidegree b = bidegree_from_key(key, ptr);
      if (d.blocks.contains(b)) throw SchemaError(ptr, "duplicate block");
      d.blocks.emplace(b, subspace_from_json(value, rank, ptr));
    }
    return d;
  }
  if (kind == "filtration") {
    const json& steps = require(j, "steps", "");
    if (!steps.is_object()) throw SchemaError("/steps", "expected an object keyed by \"p\"");
    std::map<int, Subspace> by_index;
    for (const auto& [key, value] : steps.items()) {
      const std::string ptr = child("/steps", key);
      int p = parse_int(key, ptr);
      if (by_index.contains(p)) throw SchemaError(ptr, "duplicate step");
      by_index.emplace(p, subspace_from_json(value, rank, ptr));
    }
    HodgeFiltration f{*weight, rank, by_index.empty() ? 0 : by_index.begin()->first, {}};
    int expected = f.p_min;
    for (auto& [p, s] : by_index) {
      if (p != expected) throw SchemaError(child("/steps", std::to_string(expected)), "steps must be consecutive");
      f.steps.push_back(std::move(s));
      ++expected;
    }
    return f;
  }
  if (kind == "representation") {
    const json& coefficients = require(j, "coefficients", "");
    if (!coefficients.is_object()) throw SchemaError("/coefficients", "expected an object keyed by \"p,q\"");
    HodgeRepresentation r{weight, rank, {}};
    for (const auto& [key, value] : coefficients.items()) {
      const std::string ptr = child("/coefficients", key);
      Bidegree b = bidegree_from_key(key, ptr);
      QiMatrix m = matrix_from_json(value, rank, ptr);
      if (m.rows() != rank) throw SchemaError(ptr, "coefficient must have " + std::to_string(rank) + " rows");
      r.coefficients.emplace(b, std::move(m));
    }
    return r;
  }
  throw SchemaError("/kind", "unknown kind '" + kind + "'");
}

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"code", v.code}, {"message", v.message}});
  return {{"valid", report.valid()}, {"violations", violations}};
}

json to_json(const PolarizationForm& q) {
  json gram = json::array();
  for (std::size_t r = 0; r < q.rank(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < q.rank(); ++c) row.push_back(q.gram()(r, c).re().get_num().get_si());
    gram.push_back(std::move(row));
  }
  return {{"rank", q.rank()}, {"parity", to_string(q.parity())}, {"gram", gram}};
}

PolarizationForm form_from_json(const json& j) {
  const std::size_t rank = count_from_json(require(j, "rank", ""), "/rank");
  const json& parity_j = require(j, "parity", "");
  Parity parity;
  if (parity_j == "symmetric") parity = Parity::Symmetric;
  else if (parity_j == "antisymmetric") parity = Parity::Antisymmetric;
  else throw SchemaError("/parity", "expected \"symmetric\" or \"antisymmetric\"");
  const json& gram_j = require(j, "gram", "");
  if (!gram_j.is_array() || gram_j.size() != rank) throw SchemaError("/gram", "expected " + std::to_string(rank) + " rows");
  QiMatrix gram(rank, rank);
  for (std::size_t r = 0; r < rank; ++r) {
    const std::string row_ptr = child("/gram", r);
    if (!gram_j[r].is_array() || gram_j[r].size() != rank)
      throw SchemaError(row_ptr, "expected " + std::to_string(rank) + " entries");
    for (std::size_t c = 0; c < rank; ++c) {
      const std::string ptr = child(row_ptr, c);
      Rational v = rational_from_json(gram_j[r][c], ptr);
      if (v.get_den() != 1) throw SchemaError(ptr, "gram entries must be integers");
      gram(r, c) = v;
    }
  }
  try {
    return PolarizationForm(parity, std::move(gram));
  } catch (const InvalidStructure& e) {
    throw SchemaError("/gram", e.what());
  }
}

namespace {

json vector_to_json(const QiVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

}  // namespace

json to_json(const OrthogonalityCheck& c) {
  json failures = json::array();
  for (const auto& f : c.failures)
    failures.push_back({{"blocks", {to_string(f.first), to_string(f.second)}}, {"reason", f.reason}});
  return {{"ok", c.ok}, {"failures", failures}};
}

json to_json(const PositivityCheck& c) {
  json failures = json::array();
  for (const auto& f : c.failures) {
    json item = {{"block", to_string(f.block)}, {"reason", f.reason}};
    if (!f.witness.empty()) {
      item["witness"] = vector_to_json(f.witness);
      item["value"] = rational_to_json(f.value);
    }
    failures.push_back(std::move(item));
  }
  return {{"ok", c.ok}, {"failures", failures}};
}

json to_json(const HodgeRiemannReport& report) {
  return {{"orthogonality", to_json(report.orthogonality)},
          {"positivity", to_json(report.positivity)},
          {"warnings", report.warnings},
          {"overall", report.overall()}};
}

json to_json(const SL2Rep& rep) {
  json summands = json::array();
  for (const auto& s : rep.summands) summands.push_back({{"a", s.a}, {"b", s.b}, {"multiplicity", s.multiplicity}});
  return {{"summands", summands}};
}

SL2Rep sl2_rep_from_json(const json& j) {
  const json& summands = require(j, "summands", "");
  if (!summands.is_array()) throw SchemaError("/summands", "expected an array");
  SL2Rep rep;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const std::string ptr = child("/summands", k);
    auto field = [&](const char* key) {
      return static_cast<unsigned>(count_from_json(require(summands[k], key, ptr), child(ptr, key)));
    };
    rep.summands.push_back({field("a"), field("b"), field("multiplicity")});
  }
  validate(rep);
  return rep;
}

json to_json(const CharacterMultiset& c) {
  json out = json::object();
  for (const auto& [key, mult] : c) out[to_string(key)] = mult;
  return out;
}

json to_json(const NcHodgeReport& report) {
  json out = {{"is_nc_hodge", report.is_nc_hodge},
              {"weight", report.weight ? json(*report.weight) : json(nullptr)},
              {"character_table", to_json(report.characters)}};
  if (report.witness) {
    const auto& [x, y] = *report.witness;
    out["witness"] = {{"characters", {to_string(x), to_string(y)}}, {"degrees", {x.total(), y.total()}}};
  }
  if (report.induced) out["induced"] = to_json(*report.induced);
  return out;
}

json complex_to_json(Complex z) { return {{"re", format_real(z.real())}, {"im", format_real(z.imag())}}; }

json to_json(const SL2Z& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

json to_json(const TauPoint& t) { return {{"tau", complex_to_json(t.tau)}, {"word", to_json(t.word)}}; }

json to_json(const EllipticRecord& r) {
  return {{"t2", format_real(r.curve.t2)},
          {"t3", format_real(r.curve.t3)},
          {"sign_convention", kSignConvention},
          {"discriminant", format_real(r.discriminant)},
          {"j_algebraic", format_real(r.j_algebraic)},
          {"omega1", complex_to_json(r.lattice.omega1)},
          {"omega2", complex_to_json(r.lattice.omega2)},
          {"cycle_labels", {r.lattice.cycle_labels[0], r.lattice.cycle_labels[1]}},
          {"tau_reduced", complex_to_json(r.tau_reduced.tau)},
          {"reducing_word", to_json(r.tau_reduced.word)},
          {"j_of_tau", complex_to_json(r.j_of_tau)},
          {"roundtrip_g2", complex_to_json(r.roundtrip_g2)},
          {"roundtrip_g3", complex_to_json(r.roundtrip_g3)}};
}

}  // namespace hodgekit
