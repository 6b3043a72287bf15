#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "jk/checks/properties.hpp"
#include "jk/lie/lyndon.hpp"
#include "jk/mcg/theorem_b.hpp"
#include "jk/sp/sp2g_mod2.hpp"
#include "jk/trees/lcst.hpp"
#include "jk/words/logansion.hpp"

using namespace jk;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const mcg::TheoremBReport& phi_report() {
  static const mcg::TheoremBReport r = mcg::build_phi(3);
  return r;
}

Outcome stages(std::initializer_list<const char*> names) {
  Outcome o{true, ""};
  for (const char* n : names) {
    const mcg::Stage& s = phi_report().stage(n);
    o.pass = o.pass && s.pass;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += std::string(n) + (s.pass ? " ok" : " MISMATCH: " + s.value);
  }
  return o;
}

Outcome symplectic() {
  const bool n3 = words::symplectic_check(words::LogansionTable::standard(3, 3));
  const bool n4 = words::symplectic_check(words::LogansionTable::standard(3, 4));
  return {n3 && n4, std::string("g=3 N=3 ") + (n3 ? "ok" : "fails") + ", N=4 " + (n4 ? "ok" : "fails")};
}

Outcome degree_maps() {
  Outcome o = stages({"d(phi)", "dbar(phibar)"});
  const mcg::TwistWord g3{{1, 1}}, g1{{2, 1}};
  const Integer d = mcg::d_hom(g3), dp = mcg::d_prime(g3), db = mcg::d_bar(g1, 3);
  const bool spot = d == 0 && dp == 3 && db == 2;
  o.pass = o.pass && spot;
  o.detail += "; d(T_g3)=" + to_string(d) + " d'(T_g3)=" + to_string(dp) + " dbar(T_g1)=" + to_string(db);
  return o;
}

Outcome lcst() {
  const trees::LcstReport g1 = trees::lcst_quotient(1, 4);
  const trees::LcstReport g2 = trees::lcst_quotient(2, 4);
  const trees::LcstComponent c = trees::lcst_component(mcg::tree_context(3), 4, {2, 2, 2, 0, 0, 0});
  std::size_t twos = 0;
  bool elementary = true;
  for (const auto& x : c.invariants) {
    if (x == 2) ++twos;
    else if (x != 1) elementary = false;
  }
  const bool ok1 = g1.pass() && static_cast<std::int64_t>(g1.z2_count) == lie::witt_rank(2, 3);
  const bool ok2 = g2.pass() && g2.z2_count == 20;
  const bool ok3 = elementary && twos == c.expected_z2 && twos > 0;
  std::ostringstream d;
  d << "g=1 (Z2)^" << g1.z2_count << ", g=2 (Z2)^" << g2.z2_count << ", g=3 component (2,2,2,0,0,0) (Z2)^" << twos
    << " of " << c.expected_z2;
  return {ok1 && ok2 && ok3, d.str()};
}

Outcome orbit_span() {
  const sp::OrbitSpanReport r = sp::verify_orbit_span(3);
  return {r.pass(), "orbit " + std::to_string(r.orbit_dim) + " = ker " + std::to_string(r.kernel_dim)};
}

Outcome lower_bounds() {
  Outcome o{true, "g=2..8"};
  for (int g = 2; g <= 8; ++g) {
    const sp::LowerBounds b = sp::lower_bound_exponents(g);
    if (!b.pass()) {
      o.pass = false;
      o.detail += " g=" + std::to_string(g) + " mismatch";
    }
  }
  return o;
}

Outcome properties() {
  Outcome o{true, ""};
  int suites = 0;
  for (const auto& r : checks::run_all(20261015, 200)) {
    ++suites;
    if (!r.pass()) {
      o.pass = false;
      o.detail += r.name + " failed (" + r.first_failure + "); ";
    }
  }
  o.detail += std::to_string(suites) + " suites x 200 cases";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symplectic expansion", symplectic},
      {"theta of the separating curves",
       [] { return stages({"theta(gamma1)", "theta(gamma2)", "theta(gamma3)", "theta(gamma4)"}); }},
      {"tau1(i), tau2(k), tau3(phi)", [] { return stages({"tau1(i)", "tau2(k)", "tau3(phi) = [tau1(i), tau2(k)] = 0"}); }},
      {"r4(phi) congruence and R(phi) != 0", [] {
         return stages({"r4(phi): group commutator = [tau1(i), r3(k)] + [r2(i), tau2(k)]", "r4(phi) = 1/2 six-leaf tree",
                        "R(phi) != 0"});
       }},
      {"closed surface projection", [] { return stages({"varpi(tau4(phi))", "closed: image in L3(A) (x) Z2"}); }},
      {"degree maps", degree_maps},
      {"torsion of D_4 / eta(T_4)", lcst},
      {"Sp orbit of [[a1,a2],a3] spans ker varsigma", orbit_span},
      {"lower-bound exponents", lower_bounds},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << " [" << o.detail << "] ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 10" : std::string("ALL 10 PASS")) << "\n";
  return failed ? 1 : 0;
}
