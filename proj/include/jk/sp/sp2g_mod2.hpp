#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jk/kernels/kernels.hpp"
#include "jk/lie/algebra.hpp"
#include "jk/linalg/gf2.hpp"
#include "jk/linalg/rational.hpp"

// The symplectic group of H (x) Z/2 acting on L_3 (x) Z/2. Vectors of H are
// indexed like Lie letters (a_i -> i-1, b_i -> g+i-1).
namespace jk::sp {

int omega_mod2(const BitVector& x, const BitVector& y, int genus);

class SpTransformation {
 public:
  // Throws unless the matrix preserves the mod-2 pairing.
  SpTransformation(int genus, Gf2Matrix m, std::string name);

  static SpTransformation identity(int genus);
  // h -> h + omega(x, h) x
  static SpTransformation transvection(int genus, const BitVector& x, const std::string& name);
  // E_rs exchanges (a_r, b_r) and (a_s, b_s).
  static SpTransformation swap(int genus, int r, int s);
  // F_r exchanges a_r and b_r (signs vanish mod 2).
  static SpTransformation rotation(int genus, int r);
  // G_ij: a_i -> a_i + a_j, b_j -> b_j + b_i.
  static SpTransformation shear(int genus, int i, int j);

  int genus() const { return genus_; }
  const Gf2Matrix& matrix() const { return m_; }
  const std::string& name() const { return name_; }
  bool preserves_pairing() const;
  SpTransformation operator*(const SpTransformation& o) const;

 private:
  int genus_;
  Gf2Matrix m_;
  std::string name_;
};

BitVector h_vector(int genus, const std::string& text);  // e.g. "a2+a3"

// Matrix of the induced action on L_d (x) Z/2 in the Lyndon basis.
Gf2Matrix act_on_L(const SpTransformation& t, int d);
BitVector act_on_L3(const SpTransformation& t, const BitVector& v);

// varsigma([[a,b],c]) = omega(b,c) a + omega(a,c) b, as a matrix L_3 -> H.
Gf2Matrix stigma_matrix(int genus);
BitVector stigma(int genus, const BitVector& v);

// Reduction mod 2 of an integral Lie element in its Lyndon basis.
BitVector mod2(const lie::LieElement& x);

struct SesReport {
  int genus = 0;
  std::size_t dim_l3 = 0;
  std::size_t kernel_dim = 0;
  bool splits = false;  // varsigma([omega, h]) = h for every basis h
  bool pass() const { return splits && kernel_dim + 2 * static_cast<std::size_t>(genus) == dim_l3; }
};
SesReport verify_ses(int genus);

// Transvection along a2+a3, the swaps E_rs, rotations F_r, shears G_ij and
// transvections along all basis vectors.
std::vector<SpTransformation> orbit_generators(int genus);

struct OrbitSpanReport {
  int genus = 0;
  std::size_t orbit_dim = 0;
  std::size_t kernel_dim = 0;
  bool contained = false;  // orbit span inside ker varsigma
  bool serial_matches = false;
  bool pass() const { return contained && serial_matches && orbit_dim == kernel_dim; }
};
OrbitSpanReport verify_orbit_span(int genus, const BitVector& seed,
                                      kernels::Exec exec = kernels::Exec::Parallel);
OrbitSpanReport verify_orbit_span(int genus, kernels::Exec exec = kernels::Exec::Parallel);
// [[a1,a2],a3] mod 2.
BitVector kernel_seed(int genus);

struct LowerBounds {
  int genus = 0;
  std::int64_t bordered = 0;  // rank L_3(H) - 2g
  std::int64_t closed = 0;    // rank L_3(A) - g
  Rational bordered_formula;  // (8/3)(g^3 - g)
  Rational closed_formula;    // (1/3)(g^3 - 4g)
  bool pass() const { return bordered_formula == bordered && closed_formula == closed; }
};
LowerBounds lower_bound_exponents(int genus);

}  // namespace jk::sp
