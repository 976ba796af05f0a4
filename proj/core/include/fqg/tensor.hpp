#pragma once

#include <span>
#include <vector>

#include "fqg/linalg.hpp"

namespace fqg {

/// A dense operator on ℂ^{d₁} ⊗ … ⊗ ℂ^{d_k}.
///
/// Basis order is row-major over the legs with leg 1 slowest, so the operator
/// of a ⊗ b is kron(a, b). Leg numbers in the public API are 1-based, matching
/// the usual W₁₂, W₁₃, W₂₃ notation.
class TensorOperator {
 public:
  TensorOperator(std::vector<Index> dims, Matrix entries);

  static TensorOperator identity(std::vector<Index> dims);
  static TensorOperator zero(std::vector<Index> dims);
  /// Tensor product of operators on consecutive legs.
  static TensorOperator tensor(const TensorOperator& a, const TensorOperator& b);

  const std::vector<Index>& dims() const { return dims_; }
  Index legs() const { return static_cast<Index>(dims_.size()); }
  Index total_dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  TensorOperator adjoint() const;
  double norm() const { return entries_.norm(); }

  friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
  friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b);
  friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b);
  friend TensorOperator operator*(Complex s, const TensorOperator& a);

 private:
  std::vector<Index> dims_;
  Matrix entries_;
};

/// The vector functional ω_{a,b}: T ↦ ⟨a, T b⟩ (antilinear in a).
struct VectorFunctional {
  Vector bra;
  Vector ket;

  VectorFunctional(Vector bra_, Vector ket_);
  /// ω_{e_i, e_j} on the standard basis of ℂ^dim, i.e. T ↦ T(i, j).
  static VectorFunctional matrix_unit(Index dim, Index i, Index j);

  Index dim() const { return bra.size(); }
  Complex operator()(const Matrix& t) const;
};

enum class SliceSide { Left, Right };

/// Places `x` on the legs listed in `placement` (1-based, distinct) of a
/// tensor product with leg dimensions `ambient`, identity elsewhere.
TensorOperator embed_legs(const TensorOperator& x, std::span<const Index> placement,
                          std::span<const Index> ambient);

inline TensorOperator embed_legs(const TensorOperator& x, std::initializer_list<Index> placement,
                                 std::initializer_list<Index> ambient) {
  return embed_legs(x, std::span<const Index>(placement.begin(), placement.size()),
                    std::span<const Index>(ambient.begin(), ambient.size()));
}

/// Σ(a⊗b) = b⊗a, as an operator from legs [dimA, dimB] to legs [dimB, dimA].
TensorOperator flip(Index dimA, Index dimB);

/// (ω⊗id)X for side Left, (id⊗ω)X for side Right, on a two-leg operator.
Matrix slice(const TensorOperator& x, SliceSide side, const VectorFunctional& omega);

/// Slice of a two-leg operator by an arbitrary linear functional on the sliced
/// leg's operators, given as a matrix f with ω(T) = Σ f(i,j) T(i,j).
Matrix slice_with(const TensorOperator& x, SliceSide side, const Matrix& functional);

/// Frobenius distance.
double op_distance(const TensorOperator& x, const TensorOperator& y);

}  // namespace fqg
