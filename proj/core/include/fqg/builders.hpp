#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqg/group.hpp"
#include "fqg/hopf.hpp"

namespace fqg {

/// ℂ[G]: basis u_g, u_g u_h = u_{gh}, Δ(u_g) = u_g⊗u_g, S(u_g) = u_g* = u_{g⁻¹}.
FiniteHopfStarAlgebra group_algebra(const CayleyTable& group, std::string name = "group_algebra");
/// C(G): basis δ_g, pointwise product, Δ(δ_g) = Σ_{st=g} δ_s⊗δ_t, S(δ_g) = δ_{g⁻¹}.
FiniteHopfStarAlgebra function_algebra(const CayleyTable& group,
                                       std::string name = "function_algebra");
/// The dual Hopf *-algebra as a standalone algebra (dual basis labels).
FiniteHopfStarAlgebra dual_concrete(const FiniteHopfStarAlgebra& a);

/// `Loaded` marks an algebra read from a file rather than built here.
enum class PresetKind { Trivial, GroupAlgebra, FunctionAlgebra, Dual, Loaded };

/// A preset together with the group it was built from, when there is one.
struct PresetAlgebra {
  FiniteHopfStarAlgebra algebra;
  PresetKind kind;
  std::optional<CayleyTable> group;
};

/// trivial, kz2..kz6, fz2..fz6, ks3, fs3, dual:<preset>. Throws UnknownPreset.
PresetAlgebra describe_preset(const std::string& name);
FiniteHopfStarAlgebra preset(const std::string& name);
std::vector<std::string> preset_names();

/// Matrix of the automorphism induced by a group automorphism `perm` on ℂ[G]
/// (u_g ↦ u_{perm[g]}) or C(G) (δ_g ↦ δ_{perm[g]}); both are permutations.
Matrix permutation_operator(const std::vector<Index>& perm);

}  // namespace fqg
