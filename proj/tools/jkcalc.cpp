#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jk/checks/properties.hpp"
#include "jk/errors.hpp"
#include "jk/lie/lyndon.hpp"
#include "jk/lie/render.hpp"
#include "jk/mcg/theorem_b.hpp"
#include "jk/sp/sp2g_mod2.hpp"
#include "jk/trees/lcst.hpp"
#include "jk/words/logansion.hpp"

using namespace jk;
using nlohmann::json;

namespace {

enum ExitCode { kPass = 0, kMismatch = 1, kInputError = 2, kCapabilityError = 3 };

struct Config {
  int genus = 3;
  int degree = 3;
  std::string format = "text";
  std::uint64_t seed = 20261015;
  int cases = 200;
};

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

std::string read_input(const std::string& arg) {
  if (arg != "-") return arg;
  return trim(std::string(std::istreambuf_iterator<char>(std::cin), {}));
}

std::string invariant_list(const std::vector<Integer>& diag) {
  std::ostringstream out;
  out << "[";
  std::size_t i = 0;
  while (i < diag.size()) {
    std::size_t j = i;
    while (j < diag.size() && diag[j] == diag[i]) ++j;
    if (i) out << ", ";
    out << to_string(diag[i]);
    if (j - i > 1) out << " x " << j - i;
    i = j;
  }
  out << "]";
  return out.str();
}

std::string lyndon_class(int genus, int degree, const BitVector& v) {
  const lie::LieContext& ctx = lie::LieContext::get(genus, degree);
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v.get(i)) continue;
    if (!out.empty()) out += " + ";
    out += lie::basis_string(ctx, {static_cast<std::uint8_t>(degree), static_cast<std::uint32_t>(i)});
  }
  return out.empty() ? "0" : out;
}

int emit(const Config& cfg, const json& j, const std::string& text, bool ok) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return ok ? kPass : kMismatch;
}

int cmd_theta(const Config& cfg, const std::string& arg) {
  const auto table = words::LogansionTable::standard(cfg.genus, cfg.degree);
  const std::string text = read_input(arg);
  const lie::LieElement x = table.theta(words::parse_word(text));
  json j = lie::to_json(x);
  j["word"] = text;
  return emit(cfg, j, lie::display(x) + "\n", true);
}

int cmd_theorem_b(const Config& cfg) {
  const mcg::TheoremBReport report = mcg::build_phi(cfg.genus);
  return emit(cfg, report.to_json(), report.to_text(), report.pass());
}

int cmd_symplectic(const Config& cfg, bool degree_given) {
  std::vector<int> degrees = degree_given ? std::vector<int>{cfg.degree} : std::vector<int>{3, 4};
  json j = json::array();
  std::string text;
  bool ok = true;
  for (int n : degrees) {
    const bool pass = words::symplectic_check(words::LogansionTable::standard(cfg.genus, n));
    ok = ok && pass;
    j.push_back({{"genus", cfg.genus}, {"degree", n}, {"pass", pass}});
    text += std::string(verdict(pass)) + " theta(boundary) = omega, genus " + std::to_string(cfg.genus) + ", degree " +
            std::to_string(n) + "\n";
  }
  return emit(cfg, j, text, ok);
}

int cmd_lcst(const Config& cfg) {
  const trees::LcstReport r = trees::lcst_quotient(cfg.genus, 4);
  std::vector<Integer> diag(r.rank - r.torsion.size(), Integer(1));
  diag.insert(diag.end(), r.torsion.begin(), r.torsion.end());
  json comps = json::array();
  for (const auto& c : r.components) {
    json inv = json::array();
    for (const auto& x : c.invariants) inv.push_back(to_string(x));
    comps.push_back({{"multidegree", c.md}, {"dim", c.dim}, {"rank", c.rank}, {"invariants", inv},
                     {"expected_z2", c.expected_z2}});
  }
  json torsion = json::array();
  for (const auto& x : r.torsion) torsion.push_back(to_string(x));
  json j = {{"genus", r.genus},         {"degree", r.degree},           {"ambient_dim", r.ambient_dim},
            {"rank", r.rank},           {"torsion", torsion},           {"z2_count", r.z2_count},
            {"expected_z2", r.expected_z2}, {"elementary_two", r.elementary_two}, {"components", comps},
            {"pass", r.pass()}};
  std::ostringstream t;
  t << "D_4(H) / eta(T_4(H)) at genus " << r.genus << "\n";
  t << "ambient dimension: " << r.ambient_dim << "\n";
  t << "rank of D_4: " << r.rank << "\n";
  t << "nonzero components: " << r.components.size() << "\n";
  t << "SNF diagonal: " << invariant_list(diag) << "\n";
  t << "quotient: (Z2)^" << r.z2_count << ", expected (Z2)^" << r.expected_z2
    << (r.elementary_two ? "" : ", not elementary") << "\n";
  t << verdict(r.pass()) << "\n";
  return emit(cfg, j, t.str(), r.pass());
}

int cmd_sp_kernel(const Config& cfg) {
  const sp::SesReport ses = sp::verify_ses(cfg.genus);
  const sp::OrbitSpanReport k = sp::verify_orbit_span(cfg.genus);
  const bool ok = ses.pass() && k.pass();
  json j = {{"genus", cfg.genus},
            {"dim_L3", ses.dim_l3},
            {"kernel_dim", k.kernel_dim},
            {"orbit_dim", k.orbit_dim},
            {"splits", ses.splits},
            {"contained", k.contained},
            {"serial_matches", k.serial_matches},
            {"pass", ok}};
  std::ostringstream t;
  t << "dim L_3 (x) Z2: " << ses.dim_l3 << "\n";
  t << "dim ker varsigma: " << k.kernel_dim << (ses.splits ? " (split)" : " (not split)") << "\n";
  t << "orbit span of [[a1,a2],a3]: " << k.orbit_dim << (k.contained ? " (inside the kernel)" : " (not inside)")
    << "\n";
  t << "dims " << k.orbit_dim << " = " << k.kernel_dim << ", " << verdict(ok) << "\n";
  return emit(cfg, j, t.str(), ok);
}

int cmd_lower_bounds(const Config& cfg) {
  json j = json::array();
  std::ostringstream t;
  t << "g  bordered  (8/3)(g^3-g)  closed  (1/3)(g^3-4g)\n";
  bool ok = true;
  for (int g = 2; g <= 8; ++g) {
    const sp::LowerBounds b = sp::lower_bound_exponents(g);
    ok = ok && b.pass();
    j.push_back({{"genus", g},
                 {"bordered", b.bordered},
                 {"bordered_formula", to_string(b.bordered_formula)},
                 {"closed", b.closed},
                 {"closed_formula", to_string(b.closed_formula)},
                 {"pass", b.pass()}});
    t << g << "  " << b.bordered << "  " << to_string(b.bordered_formula) << "  " << b.closed << "  "
      << to_string(b.closed_formula) << "  " << verdict(b.pass()) << "\n";
  }
  return emit(cfg, j, t.str(), ok);
}

int cmd_properties(const Config& cfg) {
  json j = json::array();
  std::ostringstream t;
  bool ok = true;
  for (const auto& r : checks::run_all(cfg.seed, cfg.cases)) {
    ok = ok && r.pass();
    j.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"first_failure", r.first_failure}});
    t << verdict(r.pass()) << " " << r.name << " (" << r.cases << " cases";
    if (r.failures) t << ", " << r.failures << " failed; " << r.first_failure;
    t << ")\n";
  }
  return emit(cfg, j, t.str(), ok);
}

int cmd_ranks(const Config& cfg) {
  const int n = 2 * cfg.genus;
  json j = {{"genus", cfg.genus}};
  std::ostringstream t;
  t << "genus " << cfg.genus << "\n";
  for (int d = 1; d <= 6; ++d) {
    j["L"].push_back(lie::witt_rank(n, d));
    t << "rank L_" << d << "(H) = " << lie::witt_rank(n, d) << "\n";
  }
  for (int k = 1; k <= 4; ++k) {
    const std::int64_t r = n * lie::witt_rank(n, k + 1) - lie::witt_rank(n, k + 2);
    j["D"].push_back(r);
    t << "rank D_" << k << "(H) = " << r << "\n";
  }
  return emit(cfg, j, t.str(), true);
}

// "w^e" or "bp(gamma;c)^e"
mcg::RValue factor_from_text(const std::string& spec, const words::LogansionTable& table) {
  std::string body = trim(spec);
  int exponent = 1;
  if (const auto caret = body.rfind('^'); caret != std::string::npos && body.find(')', caret) == std::string::npos) {
    try {
      std::size_t used = 0;
      exponent = std::stoi(body.substr(caret + 1), &used);
      if (used != body.size() - caret - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad exponent in factor '" + body + "'");
    }
    body = trim(body.substr(0, caret));
  }
  if (body.rfind("bp(", 0) == 0) {
    const auto semi = body.find(';');
    if (semi == std::string::npos || body.back() != ')') throw InputError("expected bp(gamma;c) in '" + body + "'");
    mcg::BoundingPairMap b{words::parse_word(trim(body.substr(3, semi - 3))),
                           words::parse_word(trim(body.substr(semi + 1, body.size() - semi - 2))), exponent};
    return mcg::r_bp(b, table);
  }
  return mcg::r_twist({words::parse_word(body), exponent}, table);
}

mcg::RValue factor_from_json(const json& d, const words::LogansionTable& table) {
  if (d.is_array()) {
    std::vector<mcg::RValue> parts;
    for (const auto& x : d) parts.push_back(factor_from_json(x, table));
    return parts.empty() ? mcg::RValue::identity(table.genus()) : mcg::compose(parts);
  }
  if (!d.is_object()) throw InputError("factor descriptor must be an object or a list");
  const int exponent = d.value("exponent", 1);
  mcg::RValue r;
  if (d.contains("twist")) {
    r = mcg::r_twist({words::parse_word(d.at("twist").get<std::string>()), 1}, table);
  } else if (d.contains("bp")) {
    const json& b = d.at("bp");
    r = mcg::r_bp({words::parse_word(b.at("gamma").get<std::string>()),
                   words::parse_word(b.at("c").get<std::string>()), 1},
                  table);
  } else if (d.contains("commutator")) {
    const json& c = d.at("commutator");
    if (!c.is_array() || c.size() != 2) throw InputError("commutator takes two descriptors");
    r = mcg::commutator(factor_from_json(c[0], table), factor_from_json(c[1], table));
  } else if (d.contains("conjugate")) {
    const json& c = d.at("conjugate");
    if (!c.is_array() || c.size() != 2) throw InputError("conjugate takes two descriptors");
    r = mcg::conjugate_torelli(factor_from_json(c[0], table), factor_from_json(c[1], table));
  } else if (d.contains("inverse")) {
    r = mcg::inverse(factor_from_json(d.at("inverse"), table));
  } else {
    throw InputError("unknown factor descriptor " + d.dump());
  }
  return exponent == 1 ? r : mcg::power(r, exponent);
}

json rclass_json(const mcg::RClass& c, int genus) {
  json failing = json::array();
  for (const auto& md : c.failing) failing.push_back(md);
  json j = {{"zero", c.zero},
            {"failing", failing},
            {"denominator", to_string(c.denominator)},
            {"power_of_two", c.power_of_two}};
  if (c.varpi) j["varpi"] = lyndon_class(genus, 3, c.varpi->value);
  return j;
}

std::string rclass_text(const mcg::RClass& c, int genus) {
  std::ostringstream t;
  t << "R = " << (c.zero ? "0" : "nonzero") << "\n";
  t << "denominator of r4: " << to_string(c.denominator) << "\n";
  for (const auto& md : c.failing) {
    t << "failing component (";
    for (std::size_t i = 0; i < md.size(); ++i) t << (i ? "," : "") << md[i];
    t << ")\n";
  }
  if (c.varpi) t << "varpi: " << lyndon_class(genus, 3, c.varpi->value) << "\n";
  return t.str();
}

int cmd_R(const Config& cfg, const std::string& arg) {
  const auto table = words::LogansionTable::standard(cfg.genus, 4);
  const std::string spec = read_input(arg);
  std::vector<mcg::RValue> factors;
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) factors.push_back(factor_from_text(item, table));
  if (factors.empty()) throw InputError("empty factor list");
  const mcg::RClass c = mcg::R(mcg::compose(factors));
  json j = rclass_json(c, cfg.genus);
  j["spec"] = spec;
  return emit(cfg, j, rclass_text(c, cfg.genus), true);
}

int cmd_compose(const Config& cfg, const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  json spec;
  try {
    spec = json::parse(file);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed spec file: ") + e.what());
  }
  int genus = cfg.genus;
  json factors = spec;
  if (spec.is_object() && spec.contains("factors")) {
    genus = spec.value("genus", genus);
    factors = spec.at("factors");
  }
  const auto table = words::LogansionTable::standard(genus, 4);
  mcg::RValue r;
  try {
    r = factor_from_json(factors, table);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed descriptor: ") + e.what());
  }
  json j = {{"r", mcg::to_json(r)}};
  std::ostringstream t;
  t << "depth " << r.depth() << ", known through degree " << r.known() << "\n";
  for (int d = std::min(r.depth(), r.known() + 1); d <= r.known(); ++d)
    t << "r" << d << " = " << r.part(d).to_string() << "\n";
  if (r.depth() >= 2 && r.known() >= 4) {
    const mcg::RClass c = mcg::R(r);
    j["R"] = rclass_json(c, genus);
    t << rclass_text(c, genus);
  }
  return emit(cfg, j, t.str(), true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus of the infinitesimal Dehn-Nielsen representation"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--genus", cfg.genus, "surface genus")->check(CLI::Range(1, 16));
  auto* degree_opt = app.add_option("--degree", cfg.degree, "nilpotency degree of the expansion");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for the randomized property suites");
  app.add_option("--cases", cfg.cases, "cases per property suite")->check(CLI::PositiveNumber);

  std::string word;
  auto* theta = app.add_subcommand("theta", "print theta(word); '-' reads the word from stdin");
  theta->add_option("word", word, "word such as a1+b2-")->required();

  auto* verify = app.add_subcommand("verify", "run a verification pipeline");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* v_theorem = verify->add_subcommand("theorem-b", "build phi and check every stage");
  auto* v_symp = verify->add_subcommand("symplectic", "theta(boundary) = omega");
  auto* v_lcst = verify->add_subcommand("lcst", "torsion of D_4 / eta(T_4)");
  auto* v_kernel = verify->add_subcommand("sp-kernel", "Sp orbit of [[a1,a2],a3] against ker varsigma");
  auto* v_bounds = verify->add_subcommand("lower-bounds", "lower-bound exponents for g = 2..8");
  auto* v_props = verify->add_subcommand("properties", "randomized identity suites");
  for (auto* sub : verify->get_subcommands({})) sub->fallthrough();

  auto* ranks = app.add_subcommand("ranks", "ranks of L_d(H) and D_k(H)");
  std::string r_spec;
  auto* rcmd = app.add_subcommand("R", "R of a product of twists, e.g. \"a1+b1-a1-b1+^2, bp(a3+;b3+b2+a3-b2-)^-1\"");
  rcmd->add_option("spec", r_spec)->required();
  std::string compose_path;
  auto* compose = app.add_subcommand("compose", "r-value of a JSON list of factor descriptors");
  compose->add_option("file", compose_path)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*theta) return cmd_theta(cfg, word);
    if (*v_theorem) return cmd_theorem_b(cfg);
    if (*v_symp) return cmd_symplectic(cfg, degree_opt->count() > 0);
    if (*v_lcst) return cmd_lcst(cfg);
    if (*v_kernel) return cmd_sp_kernel(cfg);
    if (*v_bounds) return cmd_lower_bounds(cfg);
    if (*v_props) return cmd_properties(cfg);
    if (*ranks) return cmd_ranks(cfg);
    if (*rcmd) return cmd_R(cfg, r_spec);
    if (*compose) return cmd_compose(cfg, compose_path);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const MismatchError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kCapabilityError;
  }
  return kInputError;
}
