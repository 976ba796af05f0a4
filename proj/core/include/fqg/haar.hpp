#pragma once

#include <vector>

#include "fqg/hopf.hpp"

namespace fqg {

/// A linear functional on the algebra, stored by its values on the basis.
class Functional {
 public:
  Functional() = default;
  explicit Functional(Vector coords) : coords_(std::move(coords)) {}

  Index dim() const { return coords_.size(); }
  const Vector& coords() const { return coords_; }
  Complex operator()(const Vector& a) const { return coords_.transpose() * a; }

 private:
  Vector coords_;
};

struct HaarSolution {
  Functional haar;
  /// Dimension of the solution space of the homogeneous invariance system.
  Index nullity = 0;
  /// Smallest singular value of the invariance system counted as nonzero.
  double spectral_gap = 0.0;
  double invariance_residual = 0.0;
};

/// Solves (h⊗id)Δ = (id⊗h)Δ = h(·)𝟙, h(𝟙) = 1 and certifies uniqueness.
/// Throws NoInvariantFunctional or NonUniqueHaar.
HaarSolution solve_haar(const FiniteHopfStarAlgebra& a, double tol = kDefaultTolerance);
Functional compute_haar(const FiniteHopfStarAlgebra& a, double tol = kDefaultTolerance);

/// Left and right invariance plus normalization residuals of a candidate h.
VerificationReport verify_haar(const FiniteHopfStarAlgebra& a, const Functional& h,
                               double tol = kDefaultTolerance);

/// The GNS space of the Haar state.
///
/// `to_onb` is the upper Cholesky factor R of the Gram matrix (G = R*R); it
/// maps algebra coordinates to orthonormal ℋ coordinates. `onb_change` is
/// R⁻¹, whose columns are the orthonormal basis in algebra coordinates.
struct GnsData {
  Matrix gram;
  Matrix to_onb;
  Matrix onb_change;
  std::vector<Matrix> left_regular;
  double min_eigenvalue = 0.0;

  Index dim() const { return gram.rows(); }
  Vector to_hilbert(const Vector& a) const { return to_onb * a; }
  Vector to_algebra(const Vector& xi) const { return onb_change * xi; }
};

/// Throws NotPositive when the Gram matrix is not positive definite.
GnsData gns_construct(const FiniteHopfStarAlgebra& a, const Functional& h,
                      double tol = kDefaultTolerance);

/// Orthonormality of the change of basis and the *-representation identities.
VerificationReport verify_gns(const FiniteHopfStarAlgebra& a, const GnsData& gns,
                              double tol = kDefaultTolerance);

/// Recovers h(a) = ⟨𝟙, a⟩ from the Gram matrix.
Functional haar_from_gns(const FiniteHopfStarAlgebra& a, const GnsData& gns);

/// max |h(e_i e_j) − h(e_j e_i)|.
VerificationReport verify_trace(const FiniteHopfStarAlgebra& a, const Functional& h,
                                double tol = kDefaultTolerance);

/// Σ a_i L_i in orthonormal ℋ coordinates.
Matrix left_multiplication_matrix(const FiniteHopfStarAlgebra& a, const GnsData& gns,
                                  const Vector& coords);

/// Inverse of left_multiplication_matrix on 𝖠: algebra coordinates of an
/// operator in the image of the left regular representation. Throws
/// DimensionMismatch when the operator is not in 𝖠 within tol.
Vector algebra_coordinates(const GnsData& gns, const Matrix& op, double tol = kDefaultTolerance);

}  // namespace fqg
