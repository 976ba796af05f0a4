#include "fqg/haar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fqg/error.hpp"

namespace fqg {
namespace {

/// Rows of the homogeneous invariance system in the unknown coordinates of h:
/// first (h⊗id)Δ(e_i) − h(e_i)𝟙 coordinatewise, then (id⊗h)Δ(e_i) − h(e_i)𝟙.
Matrix invariance_system(const FiniteHopfStarAlgebra& a) {
  const Index n = a.dim();
  const Matrix& d = a.comult();
  const Vector& u = a.unit();
  Matrix sys = Matrix::Zero(2 * n * n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        sys(i * n + k, j) += d(j * n + k, i);          // coefficient of h_j in output k
        sys(n * n + i * n + j, k) += d(j * n + k, i);  // coefficient of h_k in output j
      }
    }
    for (Index k = 0; k < n; ++k) {
      sys(i * n + k, i) -= u(k);
      sys(n * n + i * n + k, i) -= u(k);
    }
  }
  return sys;
}

}  // namespace

HaarSolution solve_haar(const FiniteHopfStarAlgebra& a, double tol) {
  const Index n = a.dim();
  const Matrix sys = invariance_system(a);
  Eigen::JacobiSVD<Matrix> svd(sys, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double threshold = tol * std::max(1.0, sv(0));
  const Index nullity = static_cast<Index>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s <= threshold; }));
  if (nullity == 0) {
    throw Error(ErrorCode::NoInvariantFunctional,
                "invariance system has trivial nullspace (smallest singular value " +
                    std::to_string(sv(n - 1)) + ")");
  }
  if (nullity > 1) {
    throw Error(ErrorCode::NonUniqueHaar,
                "invariant functionals form a space of dimension " + std::to_string(nullity));
  }
  const Vector null = svd.matrixV().col(n - 1);
  const Complex at_unit = null.transpose() * a.unit();
  if (std::abs(at_unit) <= tol) {
    throw Error(ErrorCode::NoInvariantFunctional, "invariant functional vanishes on the unit");
  }
  HaarSolution out;
  out.haar = Functional(null / at_unit);
  out.nullity = nullity;
  out.spectral_gap = n >= 2 ? sv(n - 2) : std::numeric_limits<double>::infinity();
  out.invariance_residual = (sys * out.haar.coords()).norm();
  return out;
}

Functional compute_haar(const FiniteHopfStarAlgebra& a, double tol) { return solve_haar(a, tol).haar; }

VerificationReport verify_haar(const FiniteHopfStarAlgebra& a, const Functional& h, double tol) {
  const Index n = a.dim();
  if (h.dim() != n) throw Error(ErrorCode::DimensionMismatch, "functional length differs from algebra dimension");
  const Matrix hrow = h.coords().transpose();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix expected = a.unit() * hrow;
  const double t = tol * a.structure_scale();
  VerificationReport r;
  r.add("left_invariance", (kron(hrow, id) * a.comult() - expected).norm(), t);
  r.add("right_invariance", (kron(id, hrow) * a.comult() - expected).norm(), t);
  r.add("normalized", std::abs(h(a.unit()) - 1.0), t);
  return r;
}

GnsData gns_construct(const FiniteHopfStarAlgebra& a, const Functional& h, double tol) {
  const Index n = a.dim();
  if (h.dim() != n) throw Error(ErrorCode::DimensionMismatch, "functional length differs from algebra dimension");
  GnsData g;
  g.gram = Matrix(n, n);
  const RowVector hrow = h.coords().transpose();
  for (Index i = 0; i < n; ++i) {
    g.gram.row(i) = hrow * a.left_multiplication(a.star().col(i));
  }
  const Matrix hermitian = 0.5 * (g.gram + g.gram.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  g.min_eigenvalue = ev(0);
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
  if (!(g.min_eigenvalue > tol * std::max(1.0, scale))) {
    throw Error(ErrorCode::NotPositive,
                "Gram matrix of the Haar state is not positive definite (smallest eigenvalue " +
                    std::to_string(g.min_eigenvalue) + ")");
  }
  Eigen::LLT<Matrix> llt(hermitian);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::NotPositive, "Cholesky factorization of the Gram matrix failed");
  }
  g.to_onb = llt.matrixU();
  g.onb_change = g.to_onb.triangularView<Eigen::Upper>().solve(Matrix::Identity(n, n));
  g.left_regular.reserve(n);
  for (Index i = 0; i < n; ++i) {
    g.left_regular.push_back(g.to_onb * a.left_multiplication(a.basis_vector(i)) * g.onb_change);
  }
  return g;
}

VerificationReport verify_gns(const FiniteHopfStarAlgebra& a, const GnsData& g, double tol) {
  const Index n = a.dim();
  const double t = tol * a.structure_scale();
  const Matrix id = Matrix::Identity(n, n);
  VerificationReport r;
  r.add("gram_hermitian", (g.gram - g.gram.adjoint()).norm(), t);
  r.add_outcome("gram_positive", g.min_eigenvalue > tol, std::max(0.0, tol - g.min_eigenvalue), 0.0,
                "smallest Gram eigenvalue " + std::to_string(g.min_eigenvalue));
  r.add("orthonormal_basis", (g.onb_change.adjoint() * g.gram * g.onb_change - id).norm(), t);

  double mult_defect = 0.0;
  double star_defect = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Matrix expected = left_multiplication_matrix(a, g, a.mult().col(i * n + j));
      mult_defect = std::max(mult_defect, (g.left_regular[i] * g.left_regular[j] - expected).norm());
    }
    const Matrix adj = left_multiplication_matrix(a, g, a.star().col(i));
    star_defect = std::max(star_defect, (adj - g.left_regular[i].adjoint()).norm());
  }
  r.add("representation_multiplicative", mult_defect, t);
  r.add("representation_unital", (left_multiplication_matrix(a, g, a.unit()) - id).norm(), t);
  r.add("representation_star", star_defect, t);
  return r;
}

VerificationReport verify_trace(const FiniteHopfStarAlgebra& a, const Functional& h, double tol) {
  const Index n = a.dim();
  const RowVector values = h.coords().transpose() * a.mult();
  double worst = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(values(i * n + j) - values(j * n + i)));
    }
  }
  VerificationReport r;
  r.add("trace", worst, tol * a.structure_scale());
  return r;
}

Functional haar_from_gns(const FiniteHopfStarAlgebra& a, const GnsData& gns) {
  // h(x) = h(𝟙* x) = Σ_ij conj(u_i) G(i,j) x_j
  return Functional(gns.gram.transpose() * a.unit().conjugate());
}

Matrix left_multiplication_matrix(const FiniteHopfStarAlgebra& a, const GnsData& gns,
                                  const Vector& coords) {
  if (coords.size() != a.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "element has " + std::to_string(coords.size()) +
                                                  " coordinates, algebra has dimension " +
                                                  std::to_string(a.dim()));
  }
  Matrix out = Matrix::Zero(a.dim(), a.dim());
  for (Index i = 0; i < a.dim(); ++i) out += coords(i) * gns.left_regular[i];
  return out;
}

Vector algebra_coordinates(const GnsData& gns, const Matrix& op, double tol) {
  const Index n = gns.dim();
  if (op.rows() != n || op.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "operator size differs from the GNS space");
  }
  Matrix columns(n * n, n);
  for (Index i = 0; i < n; ++i) columns.col(i) = vectorize(gns.left_regular[i]);
  const SpanProjector proj(columns);
  const Vector target = vectorize(op);
  const double residual = proj.residual(target);
  if (residual > tol * (1.0 + op.norm())) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator is not left multiplication by an algebra element (residual " +
                    std::to_string(residual) + ")");
  }
  return proj.coefficients(target);
}

}  // namespace fqg
