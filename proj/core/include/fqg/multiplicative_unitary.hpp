#pragma once

#include <vector>

#include "fqg/haar.hpp"
#include "fqg/tensor.hpp"

namespace fqg {

/// W(a⊗b) = Δ(a)(𝟙⊗b) on ℋ⊗ℋ in orthonormal coordinates, together with its
/// expansion W = Σ_k X_k ⊗ L_k in Â⊗𝖠, where L_k is left multiplication by
/// the basis element e_k and X_k = (id⊗e^k)W.
class MultiplicativeUnitary {
 public:
  /// Throws ExpansionFailed if W is not in L(ℋ)⊗𝖠 within tol.
  MultiplicativeUnitary(FiniteHopfStarAlgebra algebra, GnsData gns,
                        double tol = kDefaultTolerance);

  const TensorOperator& w() const { return w_; }
  const FiniteHopfStarAlgebra& algebra() const { return algebra_; }
  const GnsData& gns() const { return gns_; }
  Index dim() const { return algebra_.dim(); }

  /// First-leg coefficients X_k of W = Σ_k X_k ⊗ L_k.
  const std::vector<Matrix>& expansion() const { return expansion_; }
  double expansion_residual() const { return expansion_residual_; }

  /// Σ_k X_k ⊗ Y_k for second-leg operators Y_k (the map id⊗F applied to W
  /// for F(e_k) = Y_k).
  TensorOperator apply_second_leg(const std::vector<TensorOperator>& images) const;

 private:
  FiniteHopfStarAlgebra algebra_;
  GnsData gns_;
  TensorOperator w_;
  std::vector<Matrix> expansion_;
  double expansion_residual_ = 0.0;
};

MultiplicativeUnitary build_W(const FiniteHopfStarAlgebra& a, const GnsData& gns,
                              double tol = kDefaultTolerance);

/// Matrix of a⊗b ↦ ((id⊗S)Δ(a))(𝟙⊗b) in orthonormal coordinates.
TensorOperator build_W_inverse_via_antipode(const FiniteHopfStarAlgebra& a, const GnsData& gns);

VerificationReport verify_unitarity(const TensorOperator& w, double tol = kDefaultTolerance);
/// ‖VW − 1‖ and ‖V − W*‖ for V from build_W_inverse_via_antipode.
VerificationReport verify_inverse_via_antipode(const MultiplicativeUnitary& w,
                                               double tol = kDefaultTolerance);
/// ‖W₂₃W₁₂W₂₃* − W₁₂W₁₃‖ for any two-leg operator with equal leg dimensions.
VerificationReport verify_pentagon(const TensorOperator& w, double tol = kDefaultTolerance);
/// Left slices (ω_{e_i,e_j}⊗id)W against the closed form and span{L_k}.
VerificationReport verify_left_slices_span_A(const MultiplicativeUnitary& w,
                                             double tol = kDefaultTolerance);
/// W(L_a⊗1)W* = (L⊗L)Δ(a) for the given element, and (id⊗Δ)W = W₁₂W₁₃.
VerificationReport comultiplication_via_W(const MultiplicativeUnitary& w, const Vector& a,
                                          double tol = kDefaultTolerance);
/// (id⊗S)W = W*.
VerificationReport verify_antipode_relation(const MultiplicativeUnitary& w,
                                            double tol = kDefaultTolerance);

/// Â = span{(id⊗ω)W}. `basis` is {X_k}; `coords_of_w` holds the independently
/// solved coefficients c(k, l) with W = Σ c(k,l) basis_k ⊗ L_l.
struct DualSubspace {
  std::vector<Matrix> basis;
  Matrix coords_of_w;
  SpanProjector projector;
  VerificationReport report;

  Index dim() const { return static_cast<Index>(basis.size()); }
  bool contains(const Matrix& x, double tol) const;
  Vector coordinates(const Matrix& x) const;
  Matrix element(const Vector& coords) const;
};

/// Throws DimensionMismatch when the span of right slices is not n-dimensional.
DualSubspace build_dual_subspace(const MultiplicativeUnitary& w, double tol = kDefaultTolerance);

struct DualComultiplication {
  TensorOperator value;
  /// c(k, l) with value = Σ c(k,l) X_k ⊗ X_l.
  Matrix coefficients;
  VerificationReport report;
};

/// Δ̂(x) = W*(1⊗x)W; throws NotInDualSubspace if x ∉ Â.
DualComultiplication dual_comultiplication(const MultiplicativeUnitary& w,
                                           const DualSubspace& dual, const Matrix& x,
                                           double tol = kDefaultTolerance);

/// (Δ̂⊗id)W = W₁₃W₂₃ and coassociativity of Δ̂ on the basis of Â.
VerificationReport verify_dual_comultiplication(const MultiplicativeUnitary& w,
                                                const DualSubspace& dual,
                                                double tol = kDefaultTolerance);

}  // namespace fqg
