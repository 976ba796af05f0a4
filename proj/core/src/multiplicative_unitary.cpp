#include "fqg/multiplicative_unitary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fqg/error.hpp"

namespace fqg {
namespace {

Matrix column(const Vector& v) { return v; }

/// Operator on ℋ⊗ℋ (orthonormal coordinates) of a map given in algebra
/// coordinates on 𝒜⊗𝒜.
Matrix to_hilbert_pair(const GnsData& g, const Matrix& on_algebra) {
  return kron(g.to_onb, g.to_onb) * on_algebra * kron(g.onb_change, g.onb_change);
}

Matrix left_regular_columns(const GnsData& g) {
  const Index n = g.dim();
  Matrix cols(n * n, n);
  for (Index k = 0; k < n; ++k) cols.col(k) = vectorize(g.left_regular[k]);
  return cols;
}

double w_scale(const TensorOperator& w) { return std::max(1.0, w.norm()); }

/// (L⊗L)(t) for t ∈ 𝒜⊗𝒜 given in coordinates.
TensorOperator left_mult_pair(const MultiplicativeUnitary& w, const Vector& t) {
  const Index n = w.dim();
  Matrix out = Matrix::Zero(n * n, n * n);
  for (Index k = 0; k < n; ++k) {
    for (Index l = 0; l < n; ++l) {
      const Complex c = t(k * n + l);
      if (c == Complex(0.0)) continue;
      out += c * kron(w.gns().left_regular[k], w.gns().left_regular[l]);
    }
  }
  return TensorOperator({n, n}, std::move(out));
}

}  // namespace

MultiplicativeUnitary::MultiplicativeUnitary(FiniteHopfStarAlgebra algebra, GnsData gns, double tol)
    : algebra_(std::move(algebra)),
      gns_(std::move(gns)),
      w_(TensorOperator::identity({1})) {
  const Index n = algebra_.dim();
  if (gns_.dim() != n) throw Error(ErrorCode::DimensionMismatch, "GNS data does not match the algebra");
  const Matrix one_tensor = kron(column(algebra_.unit()), Matrix::Identity(n, n));
  // column (i, j) of the algebra-level map is Δ(e_i)(𝟙⊗e_j)
  const Matrix on_algebra = algebra_.mult2() * kron(algebra_.comult(), one_tensor);
  w_ = TensorOperator({n, n}, to_hilbert_pair(gns_, on_algebra));

  const SpanProjector proj(left_regular_columns(gns_));
  expansion_.assign(n, Matrix::Zero(n, n));
  double sq = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Vector block = vectorize(w_.matrix().block(i * n, j * n, n, n));
      const Vector c = proj.coefficients(block);
      for (Index k = 0; k < n; ++k) expansion_[k](i, j) = c(k);
      const double r = (proj.columns() * c - block).norm();
      sq += r * r;
    }
  }
  expansion_residual_ = std::sqrt(sq);
  if (expansion_residual_ > tol * w_scale(w_)) {
    throw Error(ErrorCode::ExpansionFailed,
                "W does not lie in L(H)⊗A (residual " + std::to_string(expansion_residual_) + ")");
  }
}

TensorOperator MultiplicativeUnitary::apply_second_leg(const std::vector<TensorOperator>& images) const {
  const Index n = dim();
  if (static_cast<Index>(images.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "need one image per basis element");
  }
  std::vector<Index> dims{n};
  dims.insert(dims.end(), images[0].dims().begin(), images[0].dims().end());
  Matrix out = Matrix::Zero(n * images[0].total_dim(), n * images[0].total_dim());
  for (Index k = 0; k < n; ++k) {
    if (images[k].dims() != images[0].dims()) {
      throw Error(ErrorCode::DimensionMismatch, "second-leg images must share leg dimensions");
    }
    out += kron(expansion_[k], images[k].matrix());
  }
  return TensorOperator(std::move(dims), std::move(out));
}

MultiplicativeUnitary build_W(const FiniteHopfStarAlgebra& a, const GnsData& gns, double tol) {
  return MultiplicativeUnitary(a, gns, tol);
}

TensorOperator build_W_inverse_via_antipode(const FiniteHopfStarAlgebra& a, const GnsData& gns) {
  const Index n = a.dim();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix one_tensor = kron(column(a.unit()), id);
  const Matrix on_algebra = a.mult2() * kron(kron(id, a.antipode()) * a.comult(), one_tensor);
  return TensorOperator({n, n}, to_hilbert_pair(gns, on_algebra));
}

VerificationReport verify_unitarity(const TensorOperator& w, double tol) {
  const Matrix id = Matrix::Identity(w.total_dim(), w.total_dim());
  const double t = tol * w_scale(w);
  VerificationReport r;
  r.add("isometry", (w.matrix().adjoint() * w.matrix() - id).norm(), t);
  r.add("coisometry", (w.matrix() * w.matrix().adjoint() - id).norm(), t);
  return r;
}

VerificationReport verify_inverse_via_antipode(const MultiplicativeUnitary& w, double tol) {
  const TensorOperator v = build_W_inverse_via_antipode(w.algebra(), w.gns());
  const Matrix id = Matrix::Identity(v.total_dim(), v.total_dim());
  const double t = tol * w_scale(w.w());
  VerificationReport r;
  r.add("inverse_left", (v.matrix() * w.w().matrix() - id).norm(), t);
  r.add("inverse_right", (w.w().matrix() * v.matrix() - id).norm(), t);
  r.add("inverse_is_adjoint", (v.matrix() - w.w().matrix().adjoint()).norm(), t);
  return r;
}

VerificationReport verify_pentagon(const TensorOperator& w, double tol) {
  if (w.legs() != 2 || w.dims()[0] != w.dims()[1]) {
    throw Error(ErrorCode::DimensionMismatch, "pentagon needs an operator on H⊗H");
  }
  const Index n = w.dims()[0];
  const TensorOperator w12 = embed_legs(w, {1, 2}, {n, n, n});
  const TensorOperator w23 = embed_legs(w, {2, 3}, {n, n, n});
  const TensorOperator w13 = embed_legs(w, {1, 3}, {n, n, n});
  VerificationReport r;
  r.add("pentagon", op_distance(w23 * w12 * w23.adjoint(), w12 * w13), tol * w_scale(w));
  return r;
}

VerificationReport verify_left_slices_span_A(const MultiplicativeUnitary& w, double tol) {
  const FiniteHopfStarAlgebra& a = w.algebra();
  const GnsData& g = w.gns();
  const Index n = a.dim();
  const Functional h = haar_from_gns(a, g);
  const Matrix hslice = kron(Matrix(h.coords().transpose()), Matrix::Identity(n, n));

  Matrix slices(n * n, n * n);
  double formula_defect = 0.0;
  for (Index i = 0; i < n; ++i) {
    const Vector x = g.onb_change.col(i);
    const Vector x_star_one = kron(column(a.adjoint(x)), column(a.unit()));
    for (Index j = 0; j < n; ++j) {
      const Matrix s = slice(w.w(), SliceSide::Left, VectorFunctional::matrix_unit(n, i, j));
      slices.col(i * n + j) = vectorize(s);
      // (h⊗id)((x*⊗𝟙)Δ(y)) for the algebra elements behind the basis vectors
      const Vector y = g.onb_change.col(j);
      const Vector c = hslice * (a.mult2() * kron(column(x_star_one), column(a.comult() * y)));
      formula_defect = std::max(formula_defect, (s - left_multiplication_matrix(a, g, c)).norm());
    }
  }
  const Index rank = numerical_rank(slices, tol);
  const SpanProjector slice_span(slices);
  const SpanProjector algebra_span(left_regular_columns(g));
  double span_defect = 0.0;
  for (Index k = 0; k < n; ++k) {
    span_defect = std::max(span_defect, slice_span.residual(vectorize(g.left_regular[k])));
  }
  for (Index c = 0; c < slices.cols(); ++c) {
    span_defect = std::max(span_defect, algebra_span.residual(slices.col(c)));
  }

  const double t = tol * w_scale(w.w());
  VerificationReport r;
  r.add("left_slice_formula", formula_defect, t);
  r.add_outcome("left_slice_rank", rank == n, std::abs(static_cast<double>(rank - n)), 0.0,
                "rank " + std::to_string(rank) + ", expected " + std::to_string(n));
  r.add("left_slices_span_A", span_defect, t);
  return r;
}

VerificationReport comultiplication_via_W(const MultiplicativeUnitary& w, const Vector& a, double tol) {
  const Index n = w.dim();
  const FiniteHopfStarAlgebra& alg = w.algebra();
  const Matrix la = left_multiplication_matrix(alg, w.gns(), a);
  const Matrix& wm = w.w().matrix();
  const Matrix implemented = wm * kron(la, Matrix::Identity(n, n)) * wm.adjoint();
  const TensorOperator expected = left_mult_pair(w, alg.comultiply(a));

  std::vector<TensorOperator> images;
  for (Index k = 0; k < n; ++k) images.push_back(left_mult_pair(w, alg.comult().col(k)));
  const TensorOperator lhs = w.apply_second_leg(images);
  const TensorOperator w12 = embed_legs(w.w(), {1, 2}, {n, n, n});
  const TensorOperator w13 = embed_legs(w.w(), {1, 3}, {n, n, n});

  const double t = tol * w_scale(w.w()) * std::max(1.0, a.norm());
  VerificationReport r;
  r.add("implements_comultiplication", (implemented - expected.matrix()).norm(), t);
  r.add("id_tensor_comult_W", op_distance(lhs, w12 * w13), tol * w_scale(w.w()));
  return r;
}

VerificationReport verify_antipode_relation(const MultiplicativeUnitary& w, double tol) {
  const Index n = w.dim();
  std::vector<TensorOperator> images;
  for (Index k = 0; k < n; ++k) {
    images.emplace_back(std::vector<Index>{n},
                        left_multiplication_matrix(w.algebra(), w.gns(), w.algebra().antipode().col(k)));
  }
  VerificationReport r;
  r.add("antipode_relation", op_distance(w.apply_second_leg(images), w.w().adjoint()),
        tol * w_scale(w.w()));
  return r;
}

bool DualSubspace::contains(const Matrix& x, double tol) const {
  return projector.residual(vectorize(x)) <= tol * (1.0 + x.norm());
}

Vector DualSubspace::coordinates(const Matrix& x) const { return projector.coefficients(vectorize(x)); }

Matrix DualSubspace::element(const Vector& coords) const {
  if (coords.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate length differs from dim Â");
  Matrix out = Matrix::Zero(basis[0].rows(), basis[0].cols());
  for (Index k = 0; k < dim(); ++k) out += coords(k) * basis[k];
  return out;
}

DualSubspace build_dual_subspace(const MultiplicativeUnitary& w, double tol) {
  const Index n = w.dim();
  Matrix right_slices(n * n, n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      right_slices.col(i * n + j) =
          vectorize(slice(w.w(), SliceSide::Right, VectorFunctional::matrix_unit(n, i, j)));
    }
  }
  const Index slice_rank = numerical_rank(right_slices, tol);
  if (slice_rank != n) {
    throw Error(ErrorCode::DimensionMismatch, "right slices of W span a space of dimension " +
                                                  std::to_string(slice_rank) + ", expected " +
                                                  std::to_string(n));
  }

  DualSubspace d;
  d.basis = w.expansion();
  Matrix basis_cols(n * n, n);
  for (Index k = 0; k < n; ++k) basis_cols.col(k) = vectorize(d.basis[k]);
  d.projector = SpanProjector(basis_cols);
  const Index basis_rank = numerical_rank(basis_cols, tol);

  double slice_defect = 0.0;
  for (Index c = 0; c < right_slices.cols(); ++c) {
    slice_defect = std::max(slice_defect, d.projector.residual(right_slices.col(c)));
  }

  Matrix pair_cols(n * n * n * n, n * n);
  for (Index k = 0; k < n; ++k) {
    for (Index l = 0; l < n; ++l) pair_cols.col(k * n + l) = vectorize(kron(d.basis[k], w.gns().left_regular[l]));
  }
  const SpanProjector pair(pair_cols);
  const Vector wvec = vectorize(w.w().matrix());
  const Vector c = pair.coefficients(wvec);
  d.coords_of_w = unvectorize(c, n, n);
  const double expansion_defect = (pair_cols * c - wvec).norm();

  double product_defect = 0.0;
  double adjoint_defect = 0.0;
  for (Index i = 0; i < n; ++i) {
    adjoint_defect = std::max(adjoint_defect, d.projector.residual(vectorize(d.basis[i].adjoint())));
    for (Index j = 0; j < n; ++j) {
      product_defect = std::max(product_defect, d.projector.residual(vectorize(d.basis[i] * d.basis[j])));
    }
  }

  const double t = tol * w_scale(w.w());
  d.report.add_outcome("dual_dimension", basis_rank == n, std::abs(static_cast<double>(basis_rank - n)), 0.0,
                       "dim Â = " + std::to_string(basis_rank));
  d.report.add("right_slices_in_basis_span", slice_defect, t);
  d.report.add("W_in_dual_tensor_A", expansion_defect, t);
  d.report.add("W_expansion_coefficients", (d.coords_of_w - Matrix::Identity(n, n)).norm(), t);
  d.report.add("closed_under_product", product_defect, t);
  d.report.add("closed_under_adjoint", adjoint_defect, t);
  return d;
}

DualComultiplication dual_comultiplication(const MultiplicativeUnitary& w, const DualSubspace& dual,
                                           const Matrix& x, double tol) {
  const Index n = w.dim();
  if (x.rows() != n || x.cols() != n) throw Error(ErrorCode::DimensionMismatch, "operator size differs from H");
  if (!dual.contains(x, tol)) {
    throw Error(ErrorCode::NotInDualSubspace,
                "operator is not in the span of right slices of W (residual " +
                    std::to_string(dual.projector.residual(vectorize(x))) + ")");
  }
  const Matrix& wm = w.w().matrix();
  DualComultiplication out{
      TensorOperator({n, n}, wm.adjoint() * kron(Matrix::Identity(n, n), x) * wm), Matrix(), {}};

  Matrix pair_cols(n * n * n * n, n * n);
  for (Index k = 0; k < n; ++k) {
    for (Index l = 0; l < n; ++l) pair_cols.col(k * n + l) = vectorize(kron(dual.basis[k], dual.basis[l]));
  }
  const SpanProjector pair(pair_cols);
  const Vector target = vectorize(out.value.matrix());
  const Vector c = pair.coefficients(target);
  out.coefficients = unvectorize(c, n, n);
  out.report.add("in_dual_tensor_dual", (pair_cols * c - target).norm(),
                 tol * w_scale(w.w()) * std::max(1.0, x.norm()));
  return out;
}

VerificationReport verify_dual_comultiplication(const MultiplicativeUnitary& w, const DualSubspace& dual,
                                                double tol) {
  const Index n = w.dim();
  std::vector<DualComultiplication> images;
  images.reserve(n);
  VerificationReport r;
  double membership = 0.0;
  for (Index k = 0; k < n; ++k) {
    images.push_back(dual_comultiplication(w, dual, dual.basis[k], tol));
    membership = std::max(membership, images.back().report.checks().front().residual);
  }
  const double t = tol * w_scale(w.w());
  r.add("dual_comult_in_dual_tensor_dual", membership, t);

  Matrix acc = Matrix::Zero(n * n * n, n * n * n);
  for (Index k = 0; k < n; ++k) acc += kron(images[k].value.matrix(), w.gns().left_regular[k]);
  const TensorOperator lhs({n, n, n}, std::move(acc));
  const TensorOperator w13 = embed_legs(w.w(), {1, 3}, {n, n, n});
  const TensorOperator w23 = embed_legs(w.w(), {2, 3}, {n, n, n});
  r.add("dual_comult_tensor_id_W", op_distance(lhs, w13 * w23), t);

  double coassoc = 0.0;
  double multiplicative = 0.0;
  double star = 0.0;
  for (Index k = 0; k < n; ++k) {
    const Matrix& c = images[k].coefficients;
    Matrix left = Matrix::Zero(n * n * n, n * n * n);
    Matrix right = Matrix::Zero(n * n * n, n * n * n);
    for (Index p = 0; p < n; ++p) {
      for (Index q = 0; q < n; ++q) {
        if (c(p, q) == Complex(0.0)) continue;
        left += c(p, q) * kron(images[p].value.matrix(), dual.basis[q]);
        right += c(p, q) * kron(dual.basis[p], images[q].value.matrix());
      }
    }
    coassoc = std::max(coassoc, (left - right).norm());
    const Matrix adj = dual_comultiplication(w, dual, dual.basis[k].adjoint(), tol).value.matrix();
    star = std::max(star, (adj - images[k].value.matrix().adjoint()).norm());
    for (Index l = 0; l < n; ++l) {
      const Matrix prod = dual_comultiplication(w, dual, dual.basis[k] * dual.basis[l], tol).value.matrix();
      multiplicative = std::max(multiplicative, (prod - images[k].value.matrix() * images[l].value.matrix()).norm());
    }
  }
  r.add("dual_comult_coassociative", coassoc, t);
  r.add("dual_comult_multiplicative", multiplicative, t);
  r.add("dual_comult_star", star, t);
  return r;
}

}  // namespace fqg
