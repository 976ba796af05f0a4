#pragma once

#include <string>
#include <vector>

#include "fqg/builders.hpp"
#include "fqg/dual.hpp"
#include "fqg/group.hpp"

namespace fqg {

/// A right action of a finite group K on a finite quantum group by Hopf
/// *-automorphisms, θ: K → Aut(𝒜) a homomorphism. It induces the coaction
///   α(a) = Σ_k θ_k(a) ⊗ δ_k  ∈ 𝒜 ⊗ C(K),
/// stored as an (n·|K|) × n matrix with row index i·|K| + k.
/// C(K) is represented on ℂ^K by diagonal matrices and S_K(δ_k) = δ_{k⁻¹}.
class FiniteGroupAction {
 public:
  FiniteGroupAction(FiniteHopfStarAlgebra algebra, CayleyTable group, std::vector<Matrix> theta,
                    Matrix alpha, VerificationReport report);

  const FiniteHopfStarAlgebra& algebra() const { return algebra_; }
  const CayleyTable& group() const { return group_; }
  const std::vector<Matrix>& theta() const { return theta_; }
  const Matrix& alpha() const { return alpha_; }
  /// Axiom residuals recorded while building.
  const VerificationReport& report() const { return report_; }

  Index algebra_dim() const { return algebra_.dim(); }
  Index group_order() const { return group_.order(); }
  /// Whether every θ_k is the identity.
  bool is_trivial(double tol = kDefaultTolerance) const;

 private:
  FiniteHopfStarAlgebra algebra_;
  CayleyTable group_;
  std::vector<Matrix> theta_;
  Matrix alpha_;
  VerificationReport report_;
};

/// Named automorphism families: "trivial" (every θ_k = id), "inversion"
/// (θ of the non-identity element of a group of order ≤ 2 is the antipode)
/// and "conjugation" (θ_k(x_g) = x_{kgk⁻¹} on a group or function algebra
/// preset whose group table equals `group`). Throws UnknownPreset or
/// InvalidArgument when the family does not apply.
std::vector<Matrix> automorphism_preset(const std::string& name, const PresetAlgebra& algebra,
                                        const CayleyTable& group);

/// Verifies θ is a homomorphism into Hopf *-automorphisms, the coaction axiom
/// and the density condition. Throws NotAHomomorphism, NotAnAutomorphism or
/// CoactionAxiomFailed naming the failing element.
FiniteGroupAction build_group_action(const FiniteHopfStarAlgebra& a, const CayleyTable& group,
                                     std::vector<Matrix> theta, double tol = kDefaultTolerance);

/// Σ_k h(θ_k(a)) δ_k = h(a) 𝟙 for every basis a.
VerificationReport verify_haar_invariance(const FiniteGroupAction& action, const Functional& h,
                                          double tol = kDefaultTolerance);

/// Which antipode to use on C(K); `Identity` is a negative control.
enum class GroupAntipode { Inverse, Identity };

/// (h⊗id)(α(a)(b⊗𝟙)) = (h⊗id)((a⊗𝟙)(id⊗S_K)α(b)) for all basis pairs, plus the
/// mutually inverse maps a⊗c ↦ α(a)(𝟙⊗c) and a⊗c ↦ ((id⊗S_K)α(a))(𝟙⊗c).
VerificationReport verify_strong_right_invariance(const FiniteGroupAction& action,
                                                  const Functional& h,
                                                  double tol = kDefaultTolerance,
                                                  GroupAntipode antipode = GroupAntipode::Inverse);

/// β: 𝒜 → C(K)⊗𝒜 and γ: Â → Â⊗C(K) with V = (id⊗β)W.
///
/// `beta` is (|K|·n) × n with row index k·n + i. `gamma` acts on coordinates
/// with respect to the basis {X_j} of Â and is (n·|K|) × n with row index
/// j·|K| + k. `v` lives on legs [n, |K|, n].
struct IntertwinerData {
  Matrix beta;
  Matrix beta_via_antipodes;
  Matrix gamma;
  TensorOperator v;
  VerificationReport report;
};

/// β = σ∘(id⊗S_K)∘α, compared against σ∘(S⊗S_K)∘α∘S; unital *-homomorphism checks.
Matrix build_beta(const FiniteGroupAction& action);
Matrix build_beta_via_antipodes(const FiniteGroupAction& action);
VerificationReport verify_beta(const FiniteGroupAction& action, const Matrix& beta,
                               const Matrix& beta_via_antipodes, double tol = kDefaultTolerance);

/// γ = (𝒢⊗id)(ℱ⊗id) α ℱ⁻¹ 𝒢⁻¹ in Â-basis coordinates.
Matrix build_gamma(const FiniteGroupAction& action, const MultiplicativeUnitary& w,
                   const DualSubspace& dual, const Functional& h, double tol = kDefaultTolerance);
/// γ(x) as an operator on legs [n, |K|] for coordinates x in the basis {X_j}.
TensorOperator gamma_operator(const Matrix& gamma, const DualSubspace& dual, Index group_order,
                              const Vector& coords);
/// γ unital *-homomorphism on Â and the coaction axiom for γ.
VerificationReport verify_gamma(const Matrix& gamma, const DualSubspace& dual,
                                const CayleyTable& group, double tol = kDefaultTolerance);

/// (id⊗β)W on legs [n, |K|, n].
TensorOperator build_V(const MultiplicativeUnitary& w, const Matrix& beta, Index group_order);

IntertwinerData build_intertwiner(const FiniteGroupAction& action, const MultiplicativeUnitary& w,
                                  const DualSubspace& dual, const Functional& h,
                                  double tol = kDefaultTolerance);

/// ‖(id⊗β)W − (γ⊗id)W‖ and the sliced family
/// (h⊗id)((b⊗𝟙)α(a)) = (h⊗id)(((id⊗S_K)α(b))(a⊗𝟙)).
VerificationReport verify_main_intertwiner(const FiniteGroupAction& action,
                                           const MultiplicativeUnitary& w,
                                           const DualSubspace& dual,
                                           const IntertwinerData& data, const Functional& h,
                                           double tol = kDefaultTolerance);

enum class CommutativityMode { Auto, Full, Sliced };

/// Largest five-leg dimension n⁴|K| for which the full check is assembled.
inline constexpr Index kFullModeMaxDim = 1000;

/// Full: ‖V₂₃₄V₁₃₅ − V₁₃₅V₂₃₄‖ on legs [n, n, |K|, n, n] plus the identities
/// (Δ̂⊗id⊗id)V = V₁₃₄V₂₃₄ and (id⊗id⊗Δ)V = V₁₂₃V₁₂₄. Sliced: commutators
/// [(id⊗ν)β(a), (id⊗μ)β(b)] for left slices a, b of W and matrix-unit
/// functionals μ, ν. Both modes also report the dimension of the algebra
/// generated by the slices of β. Throws ModeUnavailable when Full is
/// requested above kFullModeMaxDim.
VerificationReport verify_slice_commutativity(const FiniteGroupAction& action,
                                              const MultiplicativeUnitary& w,
                                              const DualSubspace& dual,
                                              const IntertwinerData& data,
                                              double tol = kDefaultTolerance,
                                              CommutativityMode mode = CommutativityMode::Auto);

/// Resolves Auto against kFullModeMaxDim.
CommutativityMode resolve_mode(CommutativityMode mode, Index algebra_dim, Index group_order);

}  // namespace fqg
