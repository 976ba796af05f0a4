#pragma once

#include "fqg/multiplicative_unitary.hpp"

namespace fqg {

/// The dual Hopf *-algebra 𝒜* over the dual basis e^0..e^{n-1}: convolution
/// product, coproduct φ ↦ φ∘μ, unit ε, counit evaluation at 𝟙, antipode
/// φ ↦ φ∘S and involution φ*(a) = conj(φ(S(a)*)).
FiniteHopfStarAlgebra build_dual(const FiniteHopfStarAlgebra& a);

/// Product in 𝒜*: (φ·ψ)(a) = (φ⊗ψ)Δ(a).
Functional convolve(const FiniteHopfStarAlgebra& a, const Functional& phi, const Functional& psi);
Functional dual_adjoint(const FiniteHopfStarAlgebra& a, const Functional& phi);

/// 𝒢(φ) = (id⊗φ)W through the Â⊗𝖠 expansion of W.
Matrix G_map(const MultiplicativeUnitary& w, const Functional& phi);
/// Inverse of 𝒢 on Â; throws NotInDualSubspace.
Functional G_inverse(const MultiplicativeUnitary& w, const DualSubspace& dual, const Matrix& x,
                     double tol = kDefaultTolerance);

/// Injectivity, multiplicativity, *-compatibility and the coproduct
/// intertwining (𝒢⊗𝒢)(φ∘μ) = Δ̂(𝒢(φ)), over the dual basis.
VerificationReport verify_G_isomorphism(const MultiplicativeUnitary& w, const DualSubspace& dual,
                                        double tol = kDefaultTolerance);

/// ℱ(a) = h(· a).
Functional fourier(const FiniteHopfStarAlgebra& a, const Functional& h, const Vector& coords);
/// Column j holds the coordinates of ℱ(e_j).
Matrix fourier_matrix(const FiniteHopfStarAlgebra& a, const Functional& h);
/// Invertibility and ℱ⁻¹ℱ = id; the condition number is recorded in the note.
VerificationReport verify_fourier(const FiniteHopfStarAlgebra& a, const Functional& h,
                                  double tol = kDefaultTolerance);

/// 𝒢(ℱ(a)) against the direct vector slice (id⊗ω_{𝟙,a})W, for every basis a.
VerificationReport verify_gamma_closed_form(const MultiplicativeUnitary& w, const Functional& h,
                                            double tol = kDefaultTolerance);

}  // namespace fqg
