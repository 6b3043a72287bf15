#include "jk/checks/properties.hpp"

#include <functional>
#include <random>

#include "jk/errors.hpp"
#include "jk/mcg/invariants.hpp"
#include "jk/mcg/theorem_b.hpp"

namespace jk::checks {

using lie::BasisKey;
using lie::Letter;
using lie::LieContext;
using lie::LieElement;
using lie::RootedTree;
using mcg::RValue;
using trees::DerivationElement;
using trees::TreeSum;
using Rng = std::mt19937_64;

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational small_rational(Rng& rng) {
  int num = 0;
  while (num == 0) num = uniform(rng, -3, 3);
  return make_rational(num, uniform(rng, 1, 3));
}

LieElement random_lie(Rng& rng, const LieContext& ctx, int max_degree, int terms) {
  LieElement x(ctx);
  for (int t = 0; t < terms; ++t) {
    const int d = uniform(rng, 1, max_degree);
    const auto index = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(ctx.dimension(d)) - 1));
    x.add_term(BasisKey{static_cast<std::uint8_t>(d), index}, small_rational(rng));
  }
  return x;
}

RootedTree random_rooted(Rng& rng, int leaves, int rank) {
  if (leaves == 1) return RootedTree::leaf(static_cast<Letter>(uniform(rng, 0, rank - 1)));
  const int left = uniform(rng, 1, leaves - 1);
  return RootedTree::node(random_rooted(rng, left, rank), random_rooted(rng, leaves - left, rank));
}

TreeSum random_trees(Rng& rng, int genus, int degree, int terms) {
  TreeSum t(genus);
  for (int i = 0; i < terms; ++i) {
    const int leaves = degree + 2;
    const int left = uniform(rng, 1, leaves - 1);
    t.add(trees::Join::make(random_rooted(rng, left, 2 * genus), random_rooted(rng, leaves - left, 2 * genus)),
          make_rational(uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1), 1));
  }
  return t;
}

words::GroupWord random_word(Rng& rng, int genus, int length) {
  std::vector<words::GroupLetter> letters;
  for (int i = 0; i < length; ++i) {
    const auto kind = uniform(rng, 0, 1) ? lie::Generator::Kind::A : lie::Generator::Kind::B;
    letters.push_back({lie::Generator{kind, uniform(rng, 1, genus)}, uniform(rng, 0, 1) ? 1 : -1});
  }
  return words::GroupWord(std::move(letters));
}

bool same(const DerivationElement& a, const DerivationElement& b) { return (a - b).is_zero(); }

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }
  void run(int cases, const std::function<bool(int, std::string&)>& body) {
    for (int i = 0; i < cases; ++i) {
      std::string why;
      bool ok = false;
      try {
        ok = body(i, why);
      } catch (const std::exception& e) {
        why = e.what();
      }
      ++result_.cases;
      if (!ok) {
        if (result_.failures++ == 0) result_.first_failure = "case " + std::to_string(i) + ": " + why;
      }
    }
  }
  PropertyResult result() const { return result_; }

 private:
  PropertyResult result_;
};

// Separating twists and bounding pair maps of the genus-3 surface with known
// lifts, evaluated once with the degree-4 expansion.
struct MappingPool {
  std::vector<RValue> twists;
  std::vector<RValue> pairs;

  static const MappingPool& get() {
    static const MappingPool pool = [] {
      MappingPool p;
      const auto table = words::LogansionTable::standard(3, 4);
      using words::comm;
      using words::parse_word;
      const auto h1 = comm(parse_word("a1+"), parse_word("b1-"));
      const auto h2 = comm(parse_word("a2+"), parse_word("b2-"));
      const auto h3 = comm(parse_word("a3+"), parse_word("b3-"));
      std::vector<words::GroupWord> lifts = {mcg::gamma_lift(1), mcg::gamma_lift(2), mcg::gamma_lift(3),
                                             mcg::gamma_lift(4), h2,  h3, h2 * h1, h3 * h2};
      for (const auto& l : lifts) p.twists.push_back(mcg::r_twist({l, 1}, table));
      p.pairs.push_back(mcg::r_bp(mcg::bounding_pair(1), table));
      p.pairs.push_back(mcg::r_bp(mcg::bounding_pair(2), table));
      p.pairs.push_back(mcg::conjugate_torelli(p.pairs[0], p.pairs[1]));
      return p;
    }();
    return pool;
  }

  RValue random_pair(Rng& rng) const {
    RValue r = pairs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pairs.size()) - 1))];
    return uniform(rng, 0, 1) ? r : mcg::inverse(r);
  }

  RValue random_kernel_element(Rng& rng) const {
    const int factors = uniform(rng, 1, 2);
    RValue acc = RValue::identity(3);
    for (int i = 0; i < factors; ++i) {
      RValue t = twists[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(twists.size()) - 1))];
      if (uniform(rng, 0, 1)) t = mcg::inverse(t);
      if (uniform(rng, 0, 1)) t = mcg::conjugate_torelli(random_pair(rng), t);
      acc = mcg::compose(acc, t);
    }
    return acc;
  }

  RValue random_torelli_element(Rng& rng) const {
    RValue acc = random_pair(rng);
    if (uniform(rng, 0, 1)) acc = mcg::compose(acc, random_pair(rng));
    return acc;
  }
};

}  // namespace

PropertyResult check_bracket_axioms(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Suite suite("bracket: bilinear, alternating, Jacobi");
  suite.run(cases, [&](int i, std::string& why) {
    const LieContext& ctx = LieContext::get(i % 2 ? 3 : 2, 4);
    const LieElement x = random_lie(rng, ctx, 3, 3), y = random_lie(rng, ctx, 3, 3), z = random_lie(rng, ctx, 2, 3);
    const Rational c = small_rational(rng);
    if (!lie::bracket(x, x).is_zero()) return why = "[x,x] != 0", false;
    if (!(lie::bracket(x, y) + lie::bracket(y, x)).is_zero()) return why = "[x,y] != -[y,x]", false;
    if (!(lie::bracket(x + y * c, z) == lie::bracket(x, z) + lie::bracket(y, z) * c)) return why = "not bilinear", false;
    const LieElement jac =
        lie::bracket(lie::bracket(x, y), z) + lie::bracket(lie::bracket(y, z), x) + lie::bracket(lie::bracket(z, x), y);
    if (!jac.is_zero()) return why = "Jacobi fails", false;
    return true;
  });
  return suite.result();
}

PropertyResult check_bch_associativity(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Suite suite("BCH associativity");
  suite.run(cases, [&](int i, std::string& why) {
    const LieContext& ctx = i % 2 ? LieContext::get(3, 3) : LieContext::get(2, 4);
    const LieElement x = random_lie(rng, ctx, 2, 2), y = random_lie(rng, ctx, 2, 2), z = random_lie(rng, ctx, 2, 2);
    if (!(lie::bch(lie::bch(x, y), z) == lie::bch(x, lie::bch(y, z)))) return why = "bch not associative", false;
    return true;
  });
  return suite.result();
}

PropertyResult check_eta_bracket(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Suite suite("eta(bracket of trees) = bracket of derivations");
  suite.run(cases, [&](int i, std::string& why) {
    const int g = i % 2 ? 3 : 2;
    const LieContext& ctx = mcg::tree_context(g);
    const int p = uniform(rng, 1, 3), q = uniform(rng, 1, 4 - p);
    const TreeSum a = random_trees(rng, g, p, 2), b = random_trees(rng, g, q, 2);
    const DerivationElement lhs = trees::eta(trees::bracket_trees(a, b), ctx);
    const DerivationElement rhs = trees::derivation_bracket(trees::eta(a, ctx), trees::eta(b, ctx));
    if (!same(lhs, rhs)) return why = "degrees " + std::to_string(p) + "," + std::to_string(q), false;
    return true;
  });
  return suite.result();
}

PropertyResult check_triangle_antisymmetry(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Suite suite("P|>Q - Q|>P = [P,Q]");
  suite.run(cases, [&](int i, std::string& why) {
    const int g = i % 2 ? 3 : 2;
    const LieContext& ctx = mcg::tree_context(g);
    const int p = uniform(rng, 1, 3), q = uniform(rng, 1, 4 - p);
    const TreeSum a = random_trees(rng, g, p, 2), b = random_trees(rng, g, q, 2);
    const DerivationElement lhs = trees::eta(trees::triangle(a, b), ctx) - trees::eta(trees::triangle(b, a), ctx);
    if (!same(lhs, trees::eta(trees::bracket_trees(a, b), ctx)))
      return why = "degrees " + std::to_string(p) + "," + std::to_string(q), false;
    return true;
  });
  return suite.result();
}

PropertyResult check_truncation_identity(std::uint64_t seed, int cases) {
  Rng rng(seed);
  const MappingPool& pool = MappingPool::get();
  Suite suite("r4(fh) = r4(f) + r4(h) + 1/2 [tau2(f), tau2(h)] on K");
  suite.run(cases, [&](int, std::string& why) {
    const RValue f = pool.random_kernel_element(rng), h = pool.random_kernel_element(rng);
    const RValue fh = mcg::compose(f, h);
    const DerivationElement lhs = fh.part(4) - f.part(4) - h.part(4);
    const DerivationElement rhs = trees::derivation_bracket(f.part(2), h.part(2)) * Rational(1, 2);
    if (!same(lhs, rhs)) return why = "identity fails", false;
    if (!same(fh.part(2), f.part(2) + h.part(2)) || !same(fh.part(3), f.part(3) + h.part(3)))
      return why = "r_[2,3] not additive", false;
    return true;
  });
  return suite.result();
}

PropertyResult check_R_on_commutators(std::uint64_t seed, int cases) {
  Rng rng(seed);
  const MappingPool& pool = MappingPool::get();
  Suite suite("R vanishes on commutators of K");
  suite.run(cases, [&](int, std::string& why) {
    const RValue c = mcg::commutator(pool.random_kernel_element(rng), pool.random_kernel_element(rng));
    const mcg::RClass r = mcg::R(c);
    if (!r.zero) return why = "R([f,h]) != 0", false;
    return true;
  });
  return suite.result();
}

PropertyResult check_bp_two_routes(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Suite suite("bounding pair formulas agree with the twist difference");
  const auto table = words::LogansionTable::standard(3, 3);
  suite.run(cases, [&](int i, std::string& why) {
    mcg::BoundingPairMap b;
    if (i < 2) {
      b = mcg::bounding_pair(i + 1);
    } else {
      b.gamma = random_word(rng, 3, uniform(rng, 1, 4));
      b.c = words::comm(random_word(rng, 3, uniform(rng, 1, 3)), random_word(rng, 3, uniform(rng, 1, 3)));
      if (uniform(rng, 0, 1))
        b.c = b.c * words::comm(random_word(rng, 3, 1), random_word(rng, 3, uniform(rng, 1, 2)));
    }
    const auto routes = mcg::r_bp_two_route(b, table);
    const RValue r = mcg::r_bp(b, table);
    if (!routes[0].is_zero()) return why = "degree-0 part survives", false;
    if (!same(routes[1], r.part(1)) || !same(routes[2], r.part(2))) return why = "routes differ", false;
    return true;
  });
  return suite.result();
}

PropertyResult check_trace_on_tau3(std::uint64_t seed, int cases) {
  Rng rng(seed);
  const MappingPool& pool = MappingPool::get();
  Suite suite("Tr3 o tau3 = 0 on [I, K]");
  suite.run(cases, [&](int, std::string& why) {
    const RValue c = mcg::commutator(pool.random_torelli_element(rng), pool.random_kernel_element(rng));
    const mcg::Tau t = mcg::tau(c, 3);
    if (!t.integral) return why = "tau3 not integral", false;
    if (!mcg::tr3(trees::canonical_trees(t.value)).empty()) return why = "Tr3 != 0", false;
    return true;
  });
  return suite.result();
}

std::vector<PropertyResult> run_all(std::uint64_t seed, int cases) {
  return {check_bracket_axioms(seed, cases),      check_bch_associativity(seed + 1, cases),
          check_eta_bracket(seed + 2, cases),     check_triangle_antisymmetry(seed + 3, cases),
          check_truncation_identity(seed + 4, cases), check_R_on_commutators(seed + 5, cases),
          check_bp_two_routes(seed + 6, cases),   check_trace_on_tau3(seed + 7, cases)};
}

}  // namespace jk::checks
