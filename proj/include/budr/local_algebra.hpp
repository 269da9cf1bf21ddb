#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "budr/gf.hpp"
#include "budr/linalg.hpp"

namespace budr {

/// A finite-dimensional commutative local GF(p)-algebra R, presented by a
/// monomial basis and an explicit multiplication table.  These are the
/// truncated coefficient rings of the deformation ladders: k[t]/(t^N),
/// k[t1,t2]/(t1^2-t2^2, t1*t2), and so on.
///
/// basis[0] is always the unit; every other basis element is a monomial in
/// the maximal ideal m, and m is nilpotent (m^nilpotency == 0).  Elements
/// are coordinate vectors (Vec of length dim) relative to this basis, so
/// reduction modulo m is literally coords(0).
class LocalAlgebra {
 public:
  std::string spec;                    // the ring-spec string it was built from
  int num_vars = 0;                    // 1 or 2
  std::vector<std::string> var_names;  // "t" or {"t1","t2"}
  int dim = 0;
  std::vector<std::array<int, 2>> basis_monomials;  // exponent pairs, [0] = 1
  std::vector<std::string> basis_labels;
  std::vector<int> max_ideal_indices;  // 1..dim-1
  int nilpotency = 0;                  // least N with m^N = 0

  bool is_field() const { return dim == 1; }

  /// Coordinates of basis_i * basis_j.
  const Vec& basis_product(int i, int j) const { return mult_[i][j]; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec unit() const;
  Vec zero() const { return Vec::Zero(dim); }
  /// Coordinates of the image of a variable (throws if not a basis element).
  Vec variable(int var_index) const;

  static Fp reduce_mod_m(const Vec& coords) { return coords(0); }

  /// Scale so the first nonzero coordinate (basis order) equals 1.
  Vec monic(const Vec& coords) const;

  std::string element_to_string(const Vec& coords) const;

  /// Reduction of an arbitrary monomial (exponent pair, total degree up to
  /// the build cap) into basis coordinates.
  Vec reduce_monomial(int e1, int e2) const;

  int degree_cap() const { return cap_; }

 private:
  friend std::shared_ptr<const LocalAlgebra> build_local_algebra(
      const std::string&, int);
  std::vector<std::vector<Vec>> mult_;
  std::vector<Vec> mono_reduce_;  // per monomial index at the build cap
  int cap_ = 0;
};

using LocalAlgebraPtr = std::shared_ptr<const LocalAlgebra>;

/// Builds the quotient named by a ring-spec string over the session prime.
///
/// Grammar:  k[t]/(g1,...)  or  k[t1,t2]/(g1,...), with ^ for powers, * (or
/// juxtaposition) for products, integer coefficients mod p, and
/// (a,b)*(c,d) for the product ideal.
///
/// Throws ParseError, NonLocalError (idempotents other than 0,1 — e.g. a
/// generator with a unit term), or InfiniteWithinCapError when the quotient
/// is not certified finite-dimensional within the degree cap.
std::shared_ptr<const LocalAlgebra> build_local_algebra(const std::string& spec,
                                                        int degree_cap = 8);

/// The canonical surjection between two quotients of the same polynomial
/// ring, as a matrix from `from` coordinates to `to` coordinates.  Throws
/// MismatchError if the variable sets differ or the map is not a ring
/// surjection (i.e. the ideals are not nested).
Mat ring_surjection(const LocalAlgebra& from, const LocalAlgebra& to);

bool same_ring(const LocalAlgebra& a, const LocalAlgebra& b);

}  // namespace budr
