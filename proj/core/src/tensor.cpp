#include "fqg/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fqg/error.hpp"

namespace fqg {
namespace {

Index product(std::span<const Index> dims) {
  return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

void require_same_dims(const TensorOperator& a, const TensorOperator& b, const char* what) {
  if (a.dims() != b.dims()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": leg dimensions differ");
  }
}

/// Flat offsets of every multi-index over `legs` (0-based, in the given order)
/// inside a row-major space with the given strides.
std::vector<Index> leg_offsets(const std::vector<Index>& legs, std::span<const Index> ambient,
                               const std::vector<Index>& strides) {
  std::vector<Index> offsets{0};
  for (Index leg : legs) {
    std::vector<Index> next;
    next.reserve(offsets.size() * ambient[leg]);
    for (Index base : offsets) {
      for (Index v = 0; v < ambient[leg]; ++v) next.push_back(base + v * strides[leg]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

TensorOperator::TensorOperator(std::vector<Index> dims, Matrix entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  if (dims_.empty()) throw Error(ErrorCode::InvalidArgument, "tensor operator needs at least one leg");
  if (std::any_of(dims_.begin(), dims_.end(), [](Index d) { return d < 1; })) {
    throw Error(ErrorCode::InvalidArgument, "leg dimensions must be positive");
  }
  const Index total = product(dims_);
  if (entries_.rows() != total || entries_.cols() != total) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator of size " + std::to_string(entries_.rows()) + "x" +
                    std::to_string(entries_.cols()) + " does not match leg product " +
                    std::to_string(total));
  }
}

TensorOperator TensorOperator::identity(std::vector<Index> dims) {
  const Index total = product(dims);
  return TensorOperator(std::move(dims), Matrix::Identity(total, total));
}

TensorOperator TensorOperator::zero(std::vector<Index> dims) {
  const Index total = product(dims);
  return TensorOperator(std::move(dims), Matrix::Zero(total, total));
}

TensorOperator TensorOperator::tensor(const TensorOperator& a, const TensorOperator& b) {
  std::vector<Index> dims = a.dims_;
  dims.insert(dims.end(), b.dims_.begin(), b.dims_.end());
  return TensorOperator(std::move(dims), kron(a.entries_, b.entries_));
}

TensorOperator TensorOperator::adjoint() const { return TensorOperator(dims_, entries_.adjoint()); }

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
  require_same_dims(a, b, "operator product");
  return TensorOperator(a.dims_, a.entries_ * b.entries_);
}

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
  require_same_dims(a, b, "operator sum");
  return TensorOperator(a.dims_, a.entries_ + b.entries_);
}

TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
  require_same_dims(a, b, "operator difference");
  return TensorOperator(a.dims_, a.entries_ - b.entries_);
}

TensorOperator operator*(Complex s, const TensorOperator& a) {
  return TensorOperator(a.dims_, s * a.entries_);
}

VectorFunctional::VectorFunctional(Vector bra_, Vector ket_) : bra(std::move(bra_)), ket(std::move(ket_)) {
  if (bra.size() != ket.size() || bra.size() < 1) {
    throw Error(ErrorCode::DimensionMismatch, "vector functional needs bra and ket of equal positive length");
  }
}

VectorFunctional VectorFunctional::matrix_unit(Index dim, Index i, Index j) {
  return VectorFunctional(Vector::Unit(dim, i), Vector::Unit(dim, j));
}

Complex VectorFunctional::operator()(const Matrix& t) const {
  if (t.rows() != dim() || t.cols() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vector functional applied to operator of wrong size");
  }
  return bra.dot(t * ket);  // dot() conjugates its left operand
}

TensorOperator embed_legs(const TensorOperator& x, std::span<const Index> placement,
                          std::span<const Index> ambient) {
  if (ambient.empty()) throw Error(ErrorCode::InvalidArgument, "ambient space has no legs");
  if (placement.size() != x.dims().size()) {
    throw Error(ErrorCode::DimensionMismatch, "placement must name one ambient leg per operator leg");
  }
  const Index legs = static_cast<Index>(ambient.size());
  std::vector<bool> used(ambient.size(), false);
  std::vector<Index> placed;
  for (std::size_t t = 0; t < placement.size(); ++t) {
    const Index leg = placement[t] - 1;
    if (leg < 0 || leg >= legs) {
      throw Error(ErrorCode::InvalidArgument, "leg " + std::to_string(placement[t]) + " is out of range");
    }
    if (used[leg]) {
      throw Error(ErrorCode::InvalidArgument, "leg " + std::to_string(placement[t]) + " is repeated");
    }
    if (ambient[leg] != x.dims()[t]) {
      throw Error(ErrorCode::DimensionMismatch,
                  "operator leg " + std::to_string(t + 1) + " has dimension " +
                      std::to_string(x.dims()[t]) + " but ambient leg " + std::to_string(placement[t]) +
                      " has dimension " + std::to_string(ambient[leg]));
    }
    used[leg] = true;
    placed.push_back(leg);
  }
  std::vector<Index> rest;
  for (Index leg = 0; leg < legs; ++leg) {
    if (!used[leg]) rest.push_back(leg);
  }

  std::vector<Index> strides(ambient.size(), 1);
  for (Index leg = legs - 2; leg >= 0; --leg) strides[leg] = strides[leg + 1] * ambient[leg + 1];

  const std::vector<Index> inner = leg_offsets(placed, ambient, strides);
  const std::vector<Index> outer = leg_offsets(rest, ambient, strides);
  const Matrix& xm = x.matrix();
  const Index total = product(ambient);

  Matrix out = Matrix::Zero(total, total);
  for (Index r : outer) {
    for (Index a = 0; a < xm.rows(); ++a) {
      for (Index b = 0; b < xm.cols(); ++b) {
        if (xm(a, b) != Complex(0.0)) out(r + inner[a], r + inner[b]) = xm(a, b);
      }
    }
  }
  return TensorOperator(std::vector<Index>(ambient.begin(), ambient.end()), std::move(out));
}

TensorOperator flip(Index dimA, Index dimB) {
  return TensorOperator({dimA, dimB}, flip_matrix(dimA, dimB));
}

Matrix slice_with(const TensorOperator& x, SliceSide side, const Matrix& functional) {
  if (x.legs() != 2) throw Error(ErrorCode::DimensionMismatch, "slice needs a two-leg operator");
  const Index d1 = x.dims()[0];
  const Index d2 = x.dims()[1];
  const Index sliced = side == SliceSide::Left ? d1 : d2;
  if (functional.rows() != sliced || functional.cols() != sliced) {
    throw Error(ErrorCode::DimensionMismatch, "functional dimension does not match the sliced leg");
  }
  const Matrix& m = x.matrix();
  if (side == SliceSide::Left) {
    Matrix out = Matrix::Zero(d2, d2);
    for (Index i = 0; i < d1; ++i) {
      for (Index j = 0; j < d1; ++j) {
        if (functional(i, j) == Complex(0.0)) continue;
        out += functional(i, j) * m.block(i * d2, j * d2, d2, d2);
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(d1, d1);
  for (Index i = 0; i < d1; ++i) {
    for (Index j = 0; j < d1; ++j) {
      const auto block = m.block(i * d2, j * d2, d2, d2);
      out(i, j) = (functional.array() * block.array()).sum();
    }
  }
  return out;
}

Matrix slice(const TensorOperator& x, SliceSide side, const VectorFunctional& omega) {
  // ω_{a,b}(T) = Σ conj(a_i) b_j T(i,j)
  return slice_with(x, side, omega.bra.conjugate() * omega.ket.transpose());
}

double op_distance(const TensorOperator& x, const TensorOperator& y) {
  require_same_dims(x, y, "op_distance");
  return (x.matrix() - y.matrix()).norm();
}

}  // namespace fqg
