#include "fqg/dual.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fqg/error.hpp"

namespace fqg {
namespace {

Matrix column(const Vector& v) { return v; }

double w_scale(const MultiplicativeUnitary& w) { return std::max(1.0, w.w().norm()); }

}  // namespace

FiniteHopfStarAlgebra build_dual(const FiniteHopfStarAlgebra& a) {
  std::vector<std::string> labels;
  for (const auto& l : a.basis_labels()) labels.push_back("d(" + l + ")");
  // Everything is a transpose with respect to the dual-basis pairing; only the
  // involution needs the antipode: (e^i)* = Σ_j (conj(σ) S)(i,j) e^j.
  return FiniteHopfStarAlgebra("dual:" + a.name(), std::move(labels), a.comult().transpose(),
                               a.mult().transpose(), a.counit().transpose(), a.unit().transpose(),
                               a.antipode().transpose(), (a.star().conjugate() * a.antipode()).transpose());
}

Functional convolve(const FiniteHopfStarAlgebra& a, const Functional& phi, const Functional& psi) {
  return Functional(a.comult().transpose() * kron(column(phi.coords()), column(psi.coords())));
}

Functional dual_adjoint(const FiniteHopfStarAlgebra& a, const Functional& phi) {
  return Functional((a.star().conjugate() * a.antipode()).transpose() * phi.coords().conjugate());
}

Matrix G_map(const MultiplicativeUnitary& w, const Functional& phi) {
  if (phi.dim() != w.dim()) throw Error(ErrorCode::DimensionMismatch, "functional length differs from algebra dimension");
  Matrix out = Matrix::Zero(w.dim(), w.dim());
  for (Index k = 0; k < w.dim(); ++k) out += phi.coords()(k) * w.expansion()[k];
  return out;
}

Functional G_inverse(const MultiplicativeUnitary& w, const DualSubspace& dual, const Matrix& x, double tol) {
  if (!dual.contains(x, tol)) {
    throw Error(ErrorCode::NotInDualSubspace, "operator is not in the image of G");
  }
  (void)w;
  return Functional(dual.coordinates(x));
}

VerificationReport verify_G_isomorphism(const MultiplicativeUnitary& w, const DualSubspace& dual, double tol) {
  const FiniteHopfStarAlgebra& a = w.algebra();
  const Index n = a.dim();
  const Matrix& wm = w.w().matrix();
  auto basis_functional = [n](Index k) { return Functional(Vector::Unit(n, k)); };

  Matrix images(n * n, n);
  for (Index k = 0; k < n; ++k) images.col(k) = vectorize(G_map(w, basis_functional(k)));
  const Index rank = numerical_rank(images, tol);

  double multiplicative = 0.0;
  double star = 0.0;
  double coproduct = 0.0;
  for (Index i = 0; i < n; ++i) {
    const Functional ei = basis_functional(i);
    const Matrix gi = G_map(w, ei);
    star = std::max(star, (G_map(w, dual_adjoint(a, ei)) - gi.adjoint()).norm());
    for (Index j = 0; j < n; ++j) {
      const Matrix prod = G_map(w, convolve(a, ei, basis_functional(j)));
      multiplicative = std::max(multiplicative, (prod - gi * G_map(w, basis_functional(j))).norm());
    }
    // (𝒢⊗𝒢)(e^i∘μ) = Σ_{p,q} m[p][q][i] X_p ⊗ X_q
    Matrix lhs = Matrix::Zero(n * n, n * n);
    for (Index p = 0; p < n; ++p) {
      for (Index q = 0; q < n; ++q) {
        const Complex m = a.mult()(i, p * n + q);
        if (m != Complex(0.0)) lhs += m * kron(dual.basis[p], dual.basis[q]);
      }
    }
    const Matrix rhs = wm.adjoint() * kron(Matrix::Identity(n, n), gi) * wm;
    coproduct = std::max(coproduct, (lhs - rhs).norm());
  }
  const Matrix unit_image = G_map(w, Functional(a.counit().transpose()));

  const double t = tol * w_scale(w);
  VerificationReport r;
  r.add_outcome("G_injective", rank == n, std::abs(static_cast<double>(rank - n)), 0.0,
                "rank " + std::to_string(rank));
  r.add("G_unital", (unit_image - Matrix::Identity(n, n)).norm(), t);
  r.add("G_multiplicative", multiplicative, t);
  r.add("G_star", star, t);
  r.add("G_intertwines_coproduct", coproduct, t);
  return r;
}

Matrix fourier_matrix(const FiniteHopfStarAlgebra& a, const Functional& h) {
  const Index n = a.dim();
  const RowVector values = h.coords().transpose() * a.mult();
  Matrix f(n, n);
  for (Index b = 0; b < n; ++b) {
    for (Index j = 0; j < n; ++j) f(b, j) = values(b * n + j);
  }
  return f;
}

Functional fourier(const FiniteHopfStarAlgebra& a, const Functional& h, const Vector& coords) {
  if (coords.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "element length differs from algebra dimension");
  return Functional(fourier_matrix(a, h) * coords);
}

VerificationReport verify_fourier(const FiniteHopfStarAlgebra& a, const Functional& h, double tol) {
  const Index n = a.dim();
  const Matrix f = fourier_matrix(a, h);
  const Eigen::VectorXd sv = singular_values(f);
  const double smallest = sv(n - 1);
  const double cond = smallest > 0.0 ? sv(0) / smallest : std::numeric_limits<double>::infinity();
  const double t = tol * a.structure_scale();
  VerificationReport r;
  r.add_outcome("fourier_invertible", smallest > tol, std::max(0.0, tol - smallest), 0.0,
                "smallest singular value " + std::to_string(smallest) + ", condition number " + std::to_string(cond));
  if (smallest > tol) {
    const Matrix inv = f.fullPivLu().inverse();
    r.add("fourier_inverse", (inv * f - Matrix::Identity(n, n)).norm(), t);
  }
  r.add("fourier_of_unit_is_haar", (fourier(a, h, a.unit()).coords() - h.coords()).norm(), t);
  return r;
}

VerificationReport verify_gamma_closed_form(const MultiplicativeUnitary& w, const Functional& h, double tol) {
  const FiniteHopfStarAlgebra& a = w.algebra();
  const Index n = a.dim();
  const Vector vacuum = w.gns().to_hilbert(a.unit());
  double worst = 0.0;
  for (Index j = 0; j < n; ++j) {
    const Matrix via_fourier = G_map(w, fourier(a, h, a.basis_vector(j)));
    // h(· e_j) restricted to 𝖠 is the vector functional ω_{𝟙, e_j}
    const VectorFunctional omega(vacuum, w.gns().to_hilbert(a.basis_vector(j)));
    worst = std::max(worst, (via_fourier - slice(w.w(), SliceSide::Right, omega)).norm());
  }
  VerificationReport r;
  r.add("G_fourier_closed_form", worst, tol * w_scale(w));
  return r;
}

}  // namespace fqg
