#pragma once

#include <string>
#include <vector>

#include "fqg/linalg.hpp"
#include "fqg/report.hpp"

namespace fqg {

/// Absolute residual tolerance used throughout unless a caller overrides it.
inline constexpr double kDefaultTolerance = 1e-9;

/// Multiplication, unit and involution of a finite-dimensional *-algebra in
/// operator form: column i*n+j of `mult` holds the coordinates of e_i·e_j and
/// column i of `star` holds e_i*. The involution is applied conjugate-linearly,
/// x* = star · conj(x).
struct StarAlgebraStructure {
  Matrix mult;
  Vector unit;
  Matrix star;

  Index dim() const { return unit.size(); }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector adjoint(const Vector& x) const { return star * x.conjugate(); }
};

/// Structure of A⊗B with factorwise product and involution.
StarAlgebraStructure tensor_product(const StarAlgebraStructure& a, const StarAlgebraStructure& b);

/// C(K) for a finite set of `points` elements: basis δ_k, pointwise product.
StarAlgebraStructure function_algebra_structure(Index points);

/// Residuals of T: A → B being a unital *-homomorphism (T is dimB × dimA).
VerificationReport check_star_homomorphism(const Matrix& t, const StarAlgebraStructure& a,
                                           const StarAlgebraStructure& b, double tol);

/// A finite-dimensional Hopf *-algebra given by structure constants.
///
/// Everything is stored in operator form over the basis e_0..e_{n-1}:
///   mult      n × n²   column i*n+j = e_i e_j
///   comult    n² × n   column i     = Δ(e_i), index j*n+k for e_j ⊗ e_k
///   unit      n        coordinates of 𝟙
///   counit    1 × n    ε(e_i)
///   antipode  n × n    column i     = S(e_i)
///   star      n × n    column i     = e_i*  (applied conjugate-linearly)
class FiniteHopfStarAlgebra {
 public:
  FiniteHopfStarAlgebra(std::string name, std::vector<std::string> basis, Matrix mult,
                        Matrix comult, Vector unit, RowVector counit, Matrix antipode,
                        Matrix star);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return basis_; }
  Index dim() const { return unit_.size(); }

  const Matrix& mult() const { return mult_; }
  const Matrix& comult() const { return comult_; }
  const Vector& unit() const { return unit_; }
  const RowVector& counit() const { return counit_; }
  const Matrix& antipode() const { return antipode_; }
  const Matrix& star() const { return star_; }

  Vector basis_vector(Index i) const;
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector comultiply(const Vector& x) const { return comult_ * x; }
  Complex counit_of(const Vector& x) const { return (counit_ * x)(0); }
  Vector apply_antipode(const Vector& x) const { return antipode_ * x; }
  Vector adjoint(const Vector& x) const { return star_ * x.conjugate(); }
  /// Left multiplication by `a` in algebra coordinates.
  Matrix left_multiplication(const Vector& a) const;

  StarAlgebraStructure algebra() const { return {mult_, unit_, star_}; }
  /// Multiplication on A⊗A, (a⊗b)(c⊗d) = ac⊗bd, as an n² × n⁴ matrix.
  const Matrix& mult2() const { return mult2_; }

  bool is_commutative(double tol = kDefaultTolerance) const;
  bool is_cocommutative(double tol = kDefaultTolerance) const;
  /// max(1, largest Frobenius norm among the structure tensors).
  double structure_scale() const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  Matrix mult_;
  Matrix comult_;
  Vector unit_;
  RowVector counit_;
  Matrix antipode_;
  Matrix star_;
  Matrix mult2_;
};

/// Re-expresses every structure tensor in the basis f_j = Σ_i p(i,j) e_i.
FiniteHopfStarAlgebra change_basis(const FiniteHopfStarAlgebra& a, const Matrix& p);

/// One check per axiom, residual = Frobenius norm of the defect, tolerance
/// tol · structure_scale().
VerificationReport verify_hopf_star_axioms(const FiniteHopfStarAlgebra& a,
                                           double tol = kDefaultTolerance);

/// Checks that T (operator form, column i = T(e_i)) is a Hopf *-algebra
/// automorphism of `a`.
VerificationReport is_hopf_star_automorphism(const FiniteHopfStarAlgebra& a, const Matrix& t,
                                             double tol = kDefaultTolerance);

}  // namespace fqg
