// g2kit: verification suites, orbit classification and table reproduction for the
// compact G2 = Aut(O). Reports are JSON; exit 0 iff every check of the invoked suite
// passes, 1 on a failed check, 2 on a usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "g2kit/derivation.hpp"
#include "g2kit/json_io.hpp"
#include "g2kit/orbit.hpp"
#include "g2kit/skolem_noether.hpp"
#include "g2kit/verify.hpp"

using namespace g2kit;
using json_io::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string backend = "float";
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  std::string out;
  double theta = default_theta();
  double phi = default_phi();
  bool exact_flag = false;
  std::string input;
  std::string p;  // comma-separated quaternion coordinates for `verify rp`

  bool exact() const { return backend == "exact" || exact_flag; }
  std::size_t trials_or(std::size_t fallback) const { return trials.value_or(fallback); }
};

ordered_json header(const char* command, const RunConfig& cfg) {
  ordered_json j;
  j["schema_version"] = json_io::kSchemaVersion;
  j["command"] = command;
  j["backend"] = cfg.exact() ? "exact" : "float";
  return j;
}

void emit(const ordered_json& j, const RunConfig& cfg) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

ordered_json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return ordered_json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int finish(ordered_json j, bool passed, const RunConfig& cfg) {
  j["passed"] = passed;
  emit(j, cfg);
  return passed ? kPass : kFail;
}

template <class T>
int run_axioms(const RunConfig& cfg) {
  const auto r = check_axioms<T>(Algebra<T>::compact(), cfg.trials_or(1000), cfg.seed);
  ordered_json j = header("axioms", cfg);
  j["seed"] = cfg.seed;
  j["trials"] = r.trials;
  auto counts = [](const AxiomCounts& c) { return ordered_json{{"checked", c.checked}, {"failed", c.failed}}; };
  j["properties"] = {{"norm_multiplicativity", counts(r.norm_multiplicativity)},
                     {"left_alternative", counts(r.left_alternative)},
                     {"right_alternative", counts(r.right_alternative)},
                     {"moufang", counts(r.moufang)},
                     {"conjugation_anti_automorphism", counts(r.conjugation)}};
  if (!is_exact_v<T>) j["worst_relative_residual"] = r.worst_relative_residual;
  j["first_failure"] = r.first_failure ? ordered_json(*r.first_failure) : ordered_json(nullptr);
  return finish(std::move(j), r.passed(), cfg);
}

template <class T>
int run_derivations(const RunConfig& cfg) {
  const auto alg = Algebra<T>::compact();
  const auto basis = derivation_basis(alg);
  double worst = 0.0;
  ordered_json mats = ordered_json::array();
  for (const auto& d : basis) {
    worst = std::max(worst, leibniz_residual(*alg, d.d));
    mats.push_back(json_io::matrix(d.d));
  }
  ordered_json j = header("derivations", cfg);
  j["context"] = json_io::context(*alg);
  j["dimension"] = basis.size();
  j["max_leibniz_residual"] = worst;
  j["basis"] = std::move(mats);
  const bool ok = basis.size() == 14 && (is_exact_v<T> ? worst == 0.0 : worst <= tol::residual);
  return finish(std::move(j), ok, cfg);
}

AutMatrix<double> load_float_element(const RunConfig& cfg) {
  const ordered_json in = read_json(cfg.input);
  if (cfg.exact()) {
    const auto t = json_io::parse_element<Rational>(in);
    return certify(Algebra<double>::compact(), to_double(t.matrix()));
  }
  return json_io::parse_element<double>(in);
}

int run_classify(const RunConfig& cfg) {
  const auto report = classify(load_float_element(cfg));
  ordered_json j = header("classify", cfg);
  j.update(json_io::classification(report));
  return finish(std::move(j), report.dims_agree(), cfg);
}

int run_centralizer(const RunConfig& cfg) {
  const ordered_json in = read_json(cfg.input);
  std::size_t measured;
  AutMatrix<double> t = AutMatrix<double>::identity(Algebra<double>::compact());
  if (cfg.exact()) {
    const auto te = json_io::parse_element<Rational>(in);
    measured = centralizer_dimension(te);
    t = certify(Algebra<double>::compact(), to_double(te.matrix()));
  } else {
    t = json_io::parse_element<double>(in);
    measured = centralizer_dimension(t);
  }
  const auto report = classify(t);
  ordered_json j = header("centralizer", cfg);
  j["type"] = std::string(to_string(report.type));
  j["measured_dim"] = measured;
  j["expected_dim"] = report.expected_dim();
  return finish(std::move(j), static_cast<int>(measured) == report.expected_dim(), cfg);
}

void print_table(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "row" << std::setw(50) << "representative" << std::setw(17) << "classified"
     << std::setw(10) << "measured" << std::setw(10) << "expected" << std::setw(12) << "components" << "witness\n";
  for (const auto& r : rows) {
    os << std::setw(18) << to_string(r.row) << std::setw(50) << representative_label(r.row) << std::setw(17)
       << to_string(r.report.type) << std::setw(10) << r.report.measured_dim << std::setw(10)
       << r.report.expected_dim() << std::setw(12) << r.report.expected_components()
       << (r.report.witness ? "yes" : "no") << (r.passes() ? "" : "   MISMATCH") << "\n";
  }
  std::cout << os.str();
}

int run_table(const RunConfig& cfg) {
  const double tolerance = classification_tolerance();
  const auto rows = table_report(cfg.theta, cfg.phi, tolerance);
  ordered_json j = header("table", cfg);
  j["theta"] = cfg.theta;
  j["phi"] = cfg.phi;
  j["tolerance"] = tolerance;
  ordered_json out = ordered_json::array();
  bool all = true;
  for (const auto& r : rows) {
    ordered_json row;
    row["row"] = std::string(to_string(r.row));
    row["representative"] = std::string(representative_label(r.row));
    row.update(json_io::classification(r.report));
    row["witness_expected"] = r.witness_expected();
    row["passed"] = r.passes();
    out.push_back(std::move(row));
    all = all && r.passes();
  }
  j["rows"] = std::move(out);
  print_table(rows);
  return finish(std::move(j), all, cfg);
}

int run_sample(const RunConfig& cfg) {
  const std::size_t n = cfg.trials_or(1000);
  const double tolerance = classification_tolerance();
  std::map<std::string, std::size_t> types;
  for (OrbitType t : kTableOrder) types[std::string(to_string(t))] = 0;
  std::map<std::size_t, std::size_t> fixed;
  std::size_t errors = 0, mismatches = 0, below_two = 0, regular = 0;
  ordered_json first_failure = nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    try {
      const auto r = classify(sample_automorphism(seed), tolerance);
      ++types[std::string(to_string(r.type))];
      ++fixed[r.fixed_dim];
      if (r.type == OrbitType::StronglyRegular) ++regular;
      if (r.fixed_dim < 2) ++below_two;
      if (!r.dims_agree()) {
        ++mismatches;
        if (first_failure.is_null()) first_failure = {{"seed", seed}, {"report", json_io::classification(r)}};
      }
    } catch (const Error& e) {
      ++errors;
      if (first_failure.is_null()) first_failure = {{"seed", seed}, {"error", std::string(to_string(e.kind()))}};
    }
  }
  ordered_json j = header("sample", cfg);
  j["seed"] = cfg.seed;
  j["trials"] = n;
  ordered_json types_json;
  for (OrbitType t : kTableOrder) types_json[std::string(to_string(t))] = types[std::string(to_string(t))];
  j["types"] = types_json;
  ordered_json fixed_json;
  for (const auto& [d, c] : fixed) fixed_json[std::to_string(d)] = c;
  j["fixed_dims"] = fixed_json;
  j["strongly_regular_fraction"] = n ? static_cast<double>(regular) / static_cast<double>(n) : 0.0;
  j["errors"] = errors;
  j["dimension_mismatches"] = mismatches;
  j["first_failure"] = first_failure;
  return finish(std::move(j), errors == 0 && mismatches == 0 && below_two == 0, cfg);
}

template <class T>
int run_extend_iso(const RunConfig& cfg) {
  const auto iso = json_io::parse_iso<T>(read_json(cfg.input));
  const auto phi = extend_isomorphism(iso);
  bool restricts = true;
  for (std::size_t i = 0; i < iso.source().dim(); ++i)
    restricts = restricts && approx_equal(phi.apply(iso.source().basis()[i]), iso.image(i), is_exact_v<T> ? 0.0 : tol::residual);
  ordered_json j = header("extend-iso", cfg);
  j["iso"] = json_io::iso(iso);
  j["automorphism"] = json_io::automorphism(phi);
  j["restricts_to_iso"] = restricts;
  return finish(std::move(j), restricts, cfg);
}

template <class T>
Octonion<T> parse_quaternion(const std::string& text) {
  Octonion<T> p;
  if (text.empty()) {
    p.c[0] = T(3) / T(5);
    p.c[1] = T(4) / T(5);
    return p;
  }
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 4) throw UsageError("--p takes four coordinates");
    try {
      p.c[i++] = json_io::parse_scalar<T>(ordered_json(item));
    } catch (const Error&) {
      throw UsageError("--p: bad coordinate " + item);
    }
  }
  if (i != 4) throw UsageError("--p takes four coordinates");
  return p;
}

template <class T>
int run_verify_rp(const RunConfig& cfg) {
  const auto p = parse_quaternion<T>(cfg.p);
  const auto r = verify_rp_centralizer<T>(Algebra<T>::compact(), p, cfg.trials_or(200), cfg.seed);
  ordered_json j = header("verify rp", cfg);
  j["p"] = json_io::octonion(r.p);
  j["seed"] = cfg.seed;
  j["trials"] = r.trials;
  j["commuting"] = r.commuting;
  j["non_commuting"] = r.non_commuting;
  j["disagreements"] = r.disagreements;
  j["both_outcomes"] = r.both_outcomes();
  if (r.first_disagreement) {
    j["first_disagreement"] = {{"p1", json_io::octonion(r.first_disagreement->p1)},
                               {"c1", json_io::octonion(r.first_disagreement->c1)},
                               {"commutes", r.first_disagreement->commutes},
                               {"p1c1_in_kp", r.first_disagreement->member}};
  } else {
    j["first_disagreement"] = nullptr;
  }
  return finish(std::move(j), r.passed(), cfg);
}

int run_verify_involution(const RunConfig& cfg) {
  const auto r = verify_involution_centralizer(cfg.trials_or(50), cfg.seed);
  ordered_json j = header("verify involution", cfg);
  j["backend"] = "exact";
  j["seed"] = cfg.seed;
  j["trials"] = r.trials;
  j["rp_commuting"] = r.rp_commuting;
  j["inner_commuting"] = r.inner_commuting;
  j["rho_centralizes_u2ext"] = r.rho_centralizes_u2ext;
  j["commutation_passed"] = r.commutation_passed();
  j["measured_dim"] = r.measured_dim;
  j["expected_dim"] = r.expected_dim;
  j["stabilizer_dim"] = r.stabilizer_dim;
  return finish(std::move(j), r.passed(), cfg);
}

int report_error(const Error& e, const RunConfig& cfg) {
  ordered_json j;
  j["schema_version"] = json_io::kSchemaVersion;
  j["error"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  if (const auto* na = dynamic_cast<const NotAutomorphismError*>(&e))
    j["counterexample"] = {{"i", na->first()}, {"j", na->second()}, {"residual", na->residual()}};
  j["passed"] = false;
  try {
    emit(j, cfg);
  } catch (const UsageError&) {
    std::cout << j.dump(2) << "\n";
  }
  return e.kind() == ErrorKind::InvalidInput ? kUsage : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g2kit: octonions, G2 and the orbit types of its compact form"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--backend", cfg.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--seed", cfg.seed, "base seed (default 0)");
  app.add_option("-n,--trials", cfg.trials, "number of trials or samples")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write the JSON report here instead of stdout");
  app.add_option("--theta", cfg.theta, "table parameter theta (default 2pi/5)");
  app.add_option("--phi", cfg.phi, "table parameter phi (default 2pi/7)");

  auto* axioms = app.add_subcommand("axioms", "composition-algebra property suite");
  axioms->add_flag("--exact", cfg.exact_flag, "use the exact rational backend");
  auto* derivations = app.add_subcommand("derivations", "dimension and basis of Der(O)");
  auto* classify_cmd = app.add_subcommand("classify", "orbit type of an element");
  classify_cmd->add_option("element", cfg.input, "element JSON")->required();
  auto* table = app.add_subcommand("table", "the six orbit types with measured centralizer dimensions");
  auto* sample = app.add_subcommand("sample", "classification histogram of seeded random elements");
  auto* centralizer = app.add_subcommand("centralizer", "measured and tabulated centralizer dimension");
  centralizer->add_option("element", cfg.input, "element JSON")->required();
  auto* extend = app.add_subcommand("extend-iso", "extend a subalgebra isomorphism to an automorphism");
  extend->add_option("iso", cfg.input, "iso JSON")->required();
  auto* verify = app.add_subcommand("verify", "centralizer lemmas");
  verify->require_subcommand(1);
  auto* rp = verify->add_subcommand("rp", "Z(R_p) = {R_p1 I_c1 : p1 c1 in k(p)}");
  rp->add_option("--p", cfg.p, "quaternion coordinates a,b,c,d (default 3/5,4/5,0,0)");
  auto* involution = verify->add_subcommand("involution", "Z(R_-1) = G(O, Q)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    const bool exact = cfg.exact();
    if (*axioms) return exact ? run_axioms<Rational>(cfg) : run_axioms<double>(cfg);
    if (*derivations) return exact ? run_derivations<Rational>(cfg) : run_derivations<double>(cfg);
    if (*classify_cmd) return run_classify(cfg);
    if (*table) return run_table(cfg);
    if (*sample) return run_sample(cfg);
    if (*centralizer) return run_centralizer(cfg);
    if (*extend) return exact ? run_extend_iso<Rational>(cfg) : run_extend_iso<double>(cfg);
    if (*rp) return exact ? run_verify_rp<Rational>(cfg) : run_verify_rp<double>(cfg);
    if (*involution) return run_verify_involution(cfg);
  } catch (const UsageError& e) {
    std::cerr << "g2kit: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    return report_error(e, cfg);
  }
  return kUsage;
}
