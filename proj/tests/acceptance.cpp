// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria (capped at 1).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "g2kit/derivation.hpp"
#include "g2kit/hermitian.hpp"
#include "g2kit/json_io.hpp"
#include "g2kit/orbit.hpp"
#include "g2kit/skolem_noether.hpp"
#include "g2kit/verify.hpp"
#include "process.hpp"

using namespace g2kit;
using json_io::ordered_json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.pass = false;
    o.detail += " (runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_seconds) + " s)";
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

ordered_json run_json(const std::string& args, int& status) {
  auto r = testing::run(testing::cli() + args);
  status = r.status;
  auto pos = testing::json_start(r.out);
  if (pos == std::string::npos) throw std::runtime_error("no JSON from g2kit" + args);
  return ordered_json::parse(r.out.substr(pos));
}

template <class T>
std::string join(const T& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

Outcome derivation_dimension() {
  int status;
  auto j = run_json(" derivations --backend exact", status);
  const int dim = j["dimension"];
  return {status == 0 && dim == 14, "dimension " + std::to_string(dim)};
}

Outcome orbit_table() {
  int status;
  auto j = run_json(" table", status);
  const std::array<int, 6> expected_dims{14, 2, 2, 4, 4, 8};
  const auto& rows = j["rows"];
  bool ok = rows.size() == 6;
  std::vector<int> dims;
  std::string notes;
  for (std::size_t i = 0; i < rows.size() && i < 6; ++i) {
    const auto& r = rows[i];
    const OrbitType want = kTableOrder[i];
    dims.push_back(r["measured_dim"]);
    if (r["type"] != std::string(to_string(want))) {
      ok = false;
      notes += " row " + std::to_string(i + 1) + " classified " + r["type"].get<std::string>() + ";";
    }
    if (dims.back() != expected_dims[i]) ok = false;
    // spectrum within 1e-7 of the representative's diagonal
    auto a = representative_matrix(want, j["theta"], j["phi"]);
    for (std::size_t k = 0; k < 3; ++k) {
      cplx z(a(k, k).re, a(k, k).im);
      double best = 1e9;
      for (const auto& s : r["spectrum"]) best = std::min(best, std::abs(cplx(s[0], s[1]) - z));
      if (best > 1e-7) {
        ok = false;
        notes += " row " + std::to_string(i + 1) + " spectrum off by " + std::to_string(best) + ";";
      }
    }
    const bool witness = !r["witness"].is_null();
    if (witness != (i == 2 || i == 4)) {
      ok = false;
      notes += " row " + std::to_string(i + 1) + " witness mismatch;";
    }
  }
  return {ok, "measured " + join(dims) + " vs " + join(expected_dims) + notes};
}

Outcome algebra_axioms() {
  auto r = check_axioms<Rational>(Algebra<Rational>::compact(), 1000, 0);
  const bool ok = r.passed() && r.norm_multiplicativity.checked == 1000 && r.moufang.checked == 1000 &&
                  r.left_alternative.checked == 1000 && r.right_alternative.checked == 1000;
  return {ok, r.first_failure.value_or("1000 exact pairs/triples, no failures")};
}

Outcome su3_bridge() {
  auto alg = Algebra<double>::compact();
  auto space = HermitianSpace<double>::standard(alg);
  Xorshift64Star rng(2024);
  double round_trip = 0.0, homomorphism = 0.0;
  for (int t = 0; t < 100; ++t) {
    auto a = random_special_unitary(rng), b = random_special_unitary(rng);
    auto ta = su3_to_aut(space, a), tb = su3_to_aut(space, b);
    round_trip = std::max(round_trip, max_abs_diff(aut_to_su3(space, ta).matrix(), a));
    homomorphism = std::max(homomorphism, max_abs_diff(su3_to_aut(space, a * b).matrix(), compose(ta, tb).matrix()));
  }
  std::ostringstream os;
  os << "round trip " << round_trip << ", homomorphism " << homomorphism;
  return {round_trip <= 1e-9 && homomorphism <= 1e-9, os.str()};
}

Outcome rp_lemma() {
  int status;
  auto j = run_json(" verify rp --backend exact --p 3/5,4/5,0,0 -n 200", status);
  const std::size_t dis = j["disagreements"], com = j["commuting"], non = j["non_commuting"];
  return {status == 0 && dis == 0 && com > 0 && non > 0 && j["trials"] == 200,
          std::to_string(com) + " commuting, " + std::to_string(non) + " not, " + std::to_string(dis) + " disagreements"};
}

Outcome intertwiner_lemma() {
  using C = Complex<Rational>;
  auto alg = Algebra<Rational>::compact();
  auto space = HermitianSpace<Rational>::standard(alg);
  auto b = intertwiner<Rational>();
  auto a = diagonal3<Rational>(C(1), C(0, 1), C(0, -1));
  const bool su = is_special_unitary(b, space.gram());
  const bool ab = a * b == b * conjugated(a);
  auto g = compose(su3_to_aut(space, b), make_rho(default_quadratic(alg), Octonion<Rational>::basis(2), Octonion<Rational>::basis(4)));
  const bool involution = approx_equal(compose(g, g), AutMatrix<Rational>::identity(alg));
  auto g_float = certify(Algebra<double>::compact(), to_double(g.matrix()));
  const bool centralizes = commutes(g_float, representative(OrbitType::TorusExt));
  std::string d = std::string("SU(H) ") + (su ? "yes" : "no") + ", AB = B conj(A) " + (ab ? "yes" : "no") +
                  ", g^2 = I " + (involution ? "yes" : "no") + ", commutes with TorusExt " + (centralizes ? "yes" : "no");
  return {su && ab && involution && centralizes, d};
}

Outcome genericity() {
  int status;
  auto j = run_json(" sample -n 1000 --seed 0", status);
  const std::size_t regular = j["types"]["StronglyRegular"];
  std::size_t low = 0;
  for (const auto& [dim, count] : j["fixed_dims"].items())
    if (std::stoi(dim) < 2) low += count.get<std::size_t>();
  return {regular >= 990 && low == 0 && j["errors"] == 0,
          std::to_string(regular) + "/1000 strongly regular, " + std::to_string(low) + " with fixed dim < 2"};
}

Outcome skolem_noether() {
  auto alg = Algebra<double>::compact();
  Xorshift64Star rng(8);
  std::size_t extended = 0, spot_checks = 0, failed = 0;
  for (std::size_t dim : {2u, 4u}) {
    for (int t = 0; t < 50; ++t) {
      std::vector<Octonion<double>> seeds;
      for (std::size_t k = 0; k < (dim == 2 ? 1u : 2u); ++k) {
        auto x = random_octonion<double>(rng);
        x.c[0] = 0.0;
        seeds.push_back(x);
      }
      auto source = generate_subalgebra(alg, seeds);
      auto s = sample_automorphism(rng.next());
      std::vector<Octonion<double>> moved;
      for (const auto& x : seeds) moved.push_back(s.apply(x));
      auto target = generate_subalgebra(alg, moved);
      Matrix<double> m(dim, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        auto c = target.coordinates(s.apply(source.basis()[i]));
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = c[j];
      }
      SubalgebraIso<double> iso(source, target, m);
      auto phi = extend_isomorphism(iso);
      bool ok = phi.certified();
      for (std::size_t i = 0; i < dim; ++i) ok = ok && approx_equal(phi.apply(source.basis()[i]), iso.image(i), 1e-8);
      extended += ok;
      failed += !ok;

      auto conj = conjugating_element(source, target);
      for (int k = 0; k < 20; ++k) {
        auto f = random_fixing_element(source, rng);
        auto moved_f = compose(conj, compose(f, inverse(conj)));
        bool fixes = true;
        for (const auto& y : target.basis()) fixes = fixes && approx_equal(moved_f.apply(y), y, 1e-8);
        ++spot_checks;
        failed += !fixes;
      }
    }
  }
  return {failed == 0 && extended == 100,
          std::to_string(extended) + "/100 extensions, " + std::to_string(spot_checks) + " conjugation spot checks, " +
              std::to_string(failed) + " failures"};
}

Outcome conjugation_invariance() {
  std::size_t failed = 0;
  Xorshift64Star rng(9);
  for (int i = 0; i < 100; ++i) {
    // alternate table representatives and generic samples
    auto t = i % 2 == 0 ? representative(kTableOrder[(i / 2) % 6]) : sample_automorphism(rng.next());
    auto g = sample_automorphism(rng.next());
    auto c = compose(g, compose(t, inverse(g)));
    auto r1 = classify(t), r2 = classify(c);
    if (r1.type != r2.type || centralizer_dimension(t) != centralizer_dimension(c)) ++failed;
  }
  return {failed == 0, std::to_string(100 - failed) + "/100 pairs invariant"};
}

}  // namespace

int main() {
  criterion(1, "derivation algebra has dimension 14 (exact)", 5.0, derivation_dimension);
  criterion(2, "six-orbit-type table", 10.0, orbit_table);
  criterion(3, "algebra axioms on 1000 exact triples", 30.0, algebra_axioms);
  criterion(4, "SU(3) bridge round trip and homomorphism", 0.0, su3_bridge);
  criterion(5, "R_p centralizer lemma, 200 trials", 0.0, rp_lemma);
  criterion(6, "intertwiner B and the Z/2 witness", 0.0, intertwiner_lemma);
  criterion(7, "genericity of sampled elements", 0.0, genericity);
  criterion(8, "Skolem-Noether extension and conjugation", 0.0, skolem_noether);
  criterion(9, "conjugation invariance of classification", 0.0, conjugation_invariance);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
