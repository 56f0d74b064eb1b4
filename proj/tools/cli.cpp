#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hodgekit/elliptic_periods.hpp"
#include "hodgekit/errors.hpp"
#include "hodgekit/json_io.hpp"
#include "hodgekit/polarization.hpp"

namespace hodgekit::cli {

namespace {

/// Carries an exit code and its stdout/stderr payloads out of a command.
struct Outcome {
  int code = kSuccess;
  json document;
  std::string message;
};

json error_document(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", "'" + path + "' is not valid JSON: " + e.what());
  }
}

AnyStructure read_structure(const std::string& path) {
  json j = read_json_file(path);
  try {
    return structure_from_json(j);
  } catch (const SchemaError& e) {
    throw SchemaError(e.pointer(), std::string("in '") + path + "': " + e.what());
  }
}

std::string kind_of(const AnyStructure& s) {
  switch (s.index()) {
    case 0: return "decomposition";
    case 1: return "filtration";
    default: return "representation";
  }
}

ValidationReport validate_any(const AnyStructure& s) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HodgeDecomposition>) return validate_decomposition(x);
        else if constexpr (std::is_same_v<T, HodgeFiltration>) return validate_filtration(x);
        else return validate_representation(x);
      },
      s);
}

/// Pure structures come back as a decomposition, mixed ones as a general structure.
std::variant<HodgeDecomposition, GeneralHodgeStructure> to_decomposition(const AnyStructure& s) {
  if (auto* d = std::get_if<HodgeDecomposition>(&s)) {
    if (auto report = validate_decomposition(*d); !report.valid())
      throw InvalidStructure("invalid decomposition: " + report.violations.front().message);
    return *d;
  }
  if (auto* f = std::get_if<HodgeFiltration>(&s)) return filtration_to_decomposition(*f);
  return representation_to_decomposition(std::get<HodgeRepresentation>(s));
}

HodgeDecomposition to_pure_decomposition(const AnyStructure& s) {
  auto d = to_decomposition(s);
  if (auto* g = std::get_if<GeneralHodgeStructure>(&d))
    throw IncompatibleOperands("structure is mixed (" + std::to_string(g->components.size()) +
                               " weights); a pure structure is required");
  return std::get<HodgeDecomposition>(d);
}

AnyStructure convert_to(const AnyStructure& s, const std::string& face) {
  auto d = to_decomposition(s);
  if (auto* g = std::get_if<GeneralHodgeStructure>(&d)) {
    if (face != "representation")
      throw IncompatibleOperands("a mixed structure has no single " + face + "; convert --to representation or use grade");
    return general_to_representation(*g);
  }
  const auto& pure = std::get<HodgeDecomposition>(d);
  if (face == "decomposition") return pure;
  if (face == "filtration") return decomposition_to_filtration(pure);
  return decomposition_to_representation(pure);
}

std::string describe(const AnyStructure& s) {
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        std::string weight;
        if constexpr (std::is_same_v<T, HodgeRepresentation>) weight = x.weight ? std::to_string(*x.weight) : "mixed";
        else weight = std::to_string(x.weight);
        return kind_of(s) + " of weight " + weight + " and rank " + std::to_string(x.rank);
      },
      s);
}

Outcome cmd_validate(const std::string& path) {
  AnyStructure s = read_structure(path);
  ValidationReport report = validate_any(s);
  json doc = to_json(report);
  doc["kind"] = kind_of(s);
  if (report.valid()) return {kSuccess, doc, "valid " + describe(s)};
  std::string message = "invalid " + describe(s) + ":";
  for (const auto& v : report.violations) message += "\n  " + v.code + ": " + v.message;
  return {kPredicateFalse, doc, message};
}

Outcome cmd_convert(const std::string& face, const std::string& path) {
  AnyStructure s = read_structure(path);
  AnyStructure result = convert_to(s, face);
  return {kSuccess, to_json(result), "converted " + describe(s) + " to " + face};
}

Outcome cmd_op(const std::vector<std::string>& args) {
  const std::string& name = args.at(0);
  std::size_t k = 0;
  std::size_t first_file = 1;
  if (name == "extpow") {
    if (args.size() < 2) throw SchemaError("k", "extpow needs a degree k");
    const std::string& text = args[1];
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw SchemaError("k", "expected a non-negative integer degree, got '" + text + "'");
    k = std::stoul(text);
    first_file = 2;
  } else if (name != "sum" && name != "tensor" && name != "dual") {
    throw SchemaError("op", "unknown operation '" + name + "' (expected sum, tensor, dual or extpow)");
  }
  std::vector<AnyStructure> inputs;
  for (std::size_t i = first_file; i < args.size(); ++i) inputs.push_back(read_structure(args[i]));
  const bool unary = name == "dual" || name == "extpow";
  if (unary && inputs.size() != 1) throw SchemaError("files", name + " takes exactly one file");
  if (!unary && inputs.size() < 2) throw SchemaError("files", name + " takes at least two files");
  for (std::size_t i = 1; i < inputs.size(); ++i)
    if (inputs[i].index() != inputs[0].index())
      throw IncompatibleOperands("operands must share a face (got " + kind_of(inputs[0]) + " and " + kind_of(inputs[i]) + ")");
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (auto report = validate_any(inputs[i]); !report.valid())
      throw InvalidStructure("operand " + std::to_string(i + 1) + " is invalid: " + report.violations.front().message);

  AnyStructure result = std::visit(
      [&](const auto& first) -> AnyStructure {
        using T = std::decay_t<decltype(first)>;
        if (name == "dual") return dual(first);
        if (name == "extpow") return exterior_power(first, k);
        T acc = first;
        for (std::size_t i = 1; i < inputs.size(); ++i) {
          const T& next = std::get<T>(inputs[i]);
          acc = name == "sum" ? direct_sum(acc, next) : tensor(acc, next);
        }
        return acc;
      },
      inputs[0]);
  return {kSuccess, to_json(result), name + " -> " + describe(result)};
}

Outcome cmd_grade(const std::string& path) {
  AnyStructure s = read_structure(path);
  auto d = to_decomposition(s);
  GeneralHodgeStructure g = std::holds_alternative<HodgeDecomposition>(d) ? as_general(std::get<HodgeDecomposition>(d))
                                                                          : std::get<GeneralHodgeStructure>(d);
  auto [even, odd] = z2_grading(g);
  return {kSuccess,
          {{"even", to_json(even)}, {"odd", to_json(odd)}},
          "even part rank " + std::to_string(even.rank()) + ", odd part rank " + std::to_string(odd.rank())};
}

Outcome cmd_polcheck(const std::string& structure_path, const std::string& form_path) {
  HodgeDecomposition d = to_pure_decomposition(read_structure(structure_path));
  json form_j = read_json_file(form_path);
  PolarizationForm q = [&] {
    try {
      return form_from_json(form_j);
    } catch (const SchemaError& e) {
      throw SchemaError(e.pointer(), std::string("in '") + form_path + "': " + e.what());
    }
  }();
  if (q.rank() != d.rank)
    throw DimensionMismatch("structure rank " + std::to_string(d.rank) + " differs from form rank " +
                            std::to_string(q.rank()));
  HodgeRiemannReport report = check_polarization(d, q);
  std::string message = report.overall() ? "Hodge-Riemann relations hold" : "Hodge-Riemann relations fail";
  for (const auto& f : report.orthogonality.failures)
    message += "\n  orthogonality " + to_string(f.first) + " x " + to_string(f.second) + ": " + f.reason;
  for (const auto& f : report.positivity.failures) message += "\n  positivity " + to_string(f.block) + ": " + f.reason;
  for (const auto& w : report.warnings) message += "\n  warning: " + w;
  return {report.overall() ? kSuccess : kPredicateFalse, to_json(report), message};
}

Outcome cmd_nc_check(const std::string& rep_text, const std::string& embedding_name) {
  TorusEmbedding embedding = parse_torus_embedding(embedding_name);
  SL2Rep rep = parse_sl2_rep(rep_text);
  NcHodgeReport report = nc_hodge_check(rep, embedding);
  json doc = to_json(report);
  doc["rep"] = to_string(rep);
  doc["embedding"] = to_string(embedding);
  std::string message;
  if (report.is_nc_hodge) {
    message = "pure of weight " + std::to_string(report.weight.value_or(0)) + ": nc-Hodge";
  } else {
    const auto& [x, y] = *report.witness;
    message = "impure: characters " + to_string(x) + " and " + to_string(y) + " have total degrees " +
              std::to_string(x.total()) + " and " + std::to_string(y.total());
  }
  return {report.is_nc_hodge ? kSuccess : kPredicateFalse, doc, message};
}

/// Decimal, scientific or "a/b" into long double. Throws SchemaError.
Real parse_real(const std::string& text, const std::string& name) {
  auto convert = [&](const std::string& part) {
    char* end = nullptr;
    Real v = std::strtold(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size()) throw SchemaError(name, "not a number: '" + text + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return convert(text);
  Real den = convert(text.substr(slash + 1));
  if (den == 0) throw SchemaError(name, "zero denominator in '" + text + "'");
  return convert(text.substr(0, slash)) / den;
}

Real default_precision() {
  const char* env = std::getenv("HODGEKIT_PREC");
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  Real p = parse_real(env, "HODGEKIT_PREC");
  if (!(p > 0)) throw SchemaError("HODGEKIT_PREC", "precision must be positive");
  return p;
}

Outcome cmd_ell(const std::string& t2_text, const std::string& t3_text, const std::string& prec_text, int terms) {
  WeierstrassCurve c{parse_real(t2_text, "--t2"), parse_real(t3_text, "--t3")};
  // Exact singularity test when both parameters are rational literals.
  try {
    if (discriminant(parse_rational(t2_text), parse_rational(t3_text)) == 0)
      throw SingularCurve("discriminant t2^3 - 27 t3^2 vanishes");
  } catch (const std::invalid_argument&) {
  }
  Real prec = prec_text.empty() ? default_precision() : parse_real(prec_text, "--prec");
  if (!(prec > 0)) throw SchemaError("--prec", "precision must be positive");
  if (terms < 1) throw SchemaError("--terms", "need at least one q-series term");
  EllipticRecord record = analyze(c, prec, terms);
  return {kSuccess, to_json(record),
          "tau = " + format_real(record.tau_reduced.tau.real()) + " + " + format_real(record.tau_reduced.tau.imag()) +
              "i, j = " + format_real(record.j_algebraic)};
}

Outcome cmd_reduce(const std::vector<std::string>& tau_text) {
  Complex tau{parse_real(tau_text.at(0), "--tau"), parse_real(tau_text.at(1), "--tau")};
  if (!(tau.imag() > 0)) throw SchemaError("--tau", "Im tau must be positive");
  TauPoint reduced = reduce_to_fundamental_domain({tau, SL2Z::identity()});
  const SL2Z& w = reduced.word;
  return {kSuccess, to_json(reduced),
          "word [[" + std::to_string(w.a) + "," + std::to_string(w.b) + "],[" + std::to_string(w.c) + "," +
              std::to_string(w.d) + "]]"};
}

Outcome failure(int code, const std::string& kind, const std::string& message, json extra = json::object()) {
  json doc = error_document(kind, message);
  for (auto& [key, value] : extra.items()) doc["error"][key] = value;
  return {code, doc, message};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hodge: exact Hodge structures, polarizations, nc-Hodge checks and elliptic periods", "hodge"};
  app.require_subcommand(1);

  std::string file, second_file, face, rep_text, embedding = "diagonal";
  std::vector<std::string> op_args, tau;
  std::string t2, t3, prec;
  int terms = kDefaultSeriesTerms;

  auto* validate = app.add_subcommand("validate", "Validate a structure file");
  validate->add_option("file", file, "Structure JSON")->required();

  auto* convert = app.add_subcommand("convert", "Convert a structure to another face");
  convert->add_option("--to", face, "Target face")
      ->required()
      ->check(CLI::IsMember({"decomposition", "filtration", "representation"}));
  convert->add_option("file", file, "Structure JSON")->required();

  auto* op = app.add_subcommand("op", "sum|tensor FILES..., dual FILE, extpow K FILE");
  op->add_option("args", op_args, "Operation, optional degree, then files")->required();

  auto* grade = app.add_subcommand("grade", "Split a structure into even and odd weights");
  grade->add_option("file", file, "Structure JSON")->required();

  auto* polcheck = app.add_subcommand("polcheck", "Check the Hodge-Riemann relations");
  polcheck->add_option("structure", file, "Structure JSON")->required();
  polcheck->add_option("form", second_file, "Polarization form JSON")->required();

  auto* nc = app.add_subcommand("nc-check", "Decide whether an SL(2,C) representation is nc-Hodge");
  nc->add_option("--rep", rep_text, "e.g. \"Sym(1)*conj(Sym(0))x2, Sym(0)*conj(Sym(0))x1\"")->required();
  nc->add_option("--embedding", embedding, "Torus embedding")->capture_default_str();

  auto* ell = app.add_subcommand("ell", "Periods and modulus of y^2 = 4x^3 - t2 x + t3");
  ell->add_option("--t2", t2, "t2 (decimal or a/b)");
  ell->add_option("--t3", t3, "t3 (decimal or a/b)");
  ell->add_option("--prec", prec, "Target relative error (default 1e-12, or HODGEKIT_PREC)");
  ell->add_option("--terms", terms, "q-series terms")->capture_default_str();
  ell->require_subcommand(0, 1);
  auto* reduce = ell->add_subcommand("reduce", "Reduce tau to the fundamental domain");
  reduce->add_option("--tau", tau, "Re and Im of tau")->required()->expected(2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, err, err);
    return code == 0 ? kSuccess : kMalformedInput;
  }

  Outcome outcome;
  try {
    if (*validate) outcome = cmd_validate(file);
    else if (*convert) outcome = cmd_convert(face, file);
    else if (*op) outcome = cmd_op(op_args);
    else if (*grade) outcome = cmd_grade(file);
    else if (*polcheck) outcome = cmd_polcheck(file, second_file);
    else if (*nc) outcome = cmd_nc_check(rep_text, embedding);
    else if (*reduce) outcome = cmd_reduce(tau);
    else if (t2.empty() || t3.empty()) throw SchemaError("--t2", "ell needs both --t2 and --t3");
    else outcome = cmd_ell(t2, t3, prec, terms);
  } catch (const SchemaError& e) {
    outcome = failure(kMalformedInput, "schema", e.what(), {{"pointer", e.pointer()}});
  } catch (const DimensionMismatch& e) {
    outcome = failure(kMalformedInput, "dimension_mismatch", e.what());
  } catch (const IncompatibleOperands& e) {
    outcome = failure(kMalformedInput, "incompatible_operands", e.what());
  } catch (const NotOpposed& e) {
    outcome = failure(kPredicateFalse, "not_opposed", e.what(), {{"index", e.index()}});
  } catch (const InvalidStructure& e) {
    outcome = failure(kPredicateFalse, "invalid_structure", e.what());
  } catch (const SingularCurve& e) {
    outcome = failure(kNumericalFailure, "singular_curve", e.what());
  } catch (const NumericalFailure& e) {
    outcome = failure(kNumericalFailure, "numerical_failure", e.what());
  } catch (const std::domain_error& e) {
    outcome = failure(kMalformedInput, "domain", e.what());
  }

  out << outcome.document.dump(2) << '\n';
  if (!outcome.message.empty()) err << (outcome.code == kSuccess ? "" : "hodge: ") << outcome.message << '\n';
  return outcome.code;
}

}  // namespace hodgekit::cli
