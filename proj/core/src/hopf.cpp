#include "fqg/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fqg/error.hpp"

namespace fqg {
namespace {

void require_shape(const Matrix& m, Index rows, Index cols, const char* field) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(field) + " has shape " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
}

Matrix identity(Index n) { return Matrix::Identity(n, n); }

Matrix column(const Vector& v) { return v; }
Matrix row(const RowVector& v) { return v; }

}  // namespace

Vector StarAlgebraStructure::multiply(const Vector& x, const Vector& y) const {
  return mult * kron(column(x), column(y));
}

StarAlgebraStructure tensor_product(const StarAlgebraStructure& a, const StarAlgebraStructure& b) {
  const Index na = a.dim();
  const Index nb = b.dim();
  const Index n = na * nb;
  StarAlgebraStructure out;
  out.unit = kron(column(a.unit), column(b.unit));
  out.star = kron(a.star, b.star);
  out.mult = Matrix::Zero(n, n * n);
  for (Index a1 = 0; a1 < na; ++a1) {
    for (Index a2 = 0; a2 < na; ++a2) {
      const Matrix pa = a.mult.col(a1 * na + a2);
      for (Index b1 = 0; b1 < nb; ++b1) {
        for (Index b2 = 0; b2 < nb; ++b2) {
          const Index col = (a1 * nb + b1) * n + (a2 * nb + b2);
          out.mult.col(col) = kron(pa, b.mult.col(b1 * nb + b2));
        }
      }
    }
  }
  return out;
}

StarAlgebraStructure function_algebra_structure(Index points) {
  StarAlgebraStructure out;
  out.unit = Vector::Ones(points);
  out.star = identity(points);
  out.mult = Matrix::Zero(points, points * points);
  for (Index k = 0; k < points; ++k) out.mult(k, k * points + k) = 1.0;
  return out;
}

VerificationReport check_star_homomorphism(const Matrix& t, const StarAlgebraStructure& a,
                                           const StarAlgebraStructure& b, double tol) {
  require_shape(t, b.dim(), a.dim(), "homomorphism matrix");
  const double scaled = tol * std::max(1.0, t.norm());
  VerificationReport report;
  report.add("unital", (t * a.unit - b.unit).norm(), scaled);
  report.add("multiplicative", (t * a.mult - b.mult * kron(t, t)).norm(), scaled);
  report.add("star", (t * a.star - b.star * t.conjugate()).norm(), scaled);
  return report;
}

FiniteHopfStarAlgebra::FiniteHopfStarAlgebra(std::string name, std::vector<std::string> basis,
                                             Matrix mult, Matrix comult, Vector unit,
                                             RowVector counit, Matrix antipode, Matrix star)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      mult_(std::move(mult)),
      comult_(std::move(comult)),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      star_(std::move(star)) {
  const Index n = unit_.size();
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "algebra dimension must be positive");
  require_shape(mult_, n, n * n, "mult");
  require_shape(comult_, n * n, n, "comult");
  require_shape(counit_, 1, n, "counit");
  require_shape(antipode_, n, n, "antipode");
  require_shape(star_, n, n, "star");
  if (basis_.empty()) {
    for (Index i = 0; i < n; ++i) basis_.push_back("e" + std::to_string(i));
  }
  if (static_cast<Index>(basis_.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "basis has " + std::to_string(basis_.size()) +
                                                  " labels for dimension " + std::to_string(n));
  }
  const StarAlgebraStructure self = algebra();
  mult2_ = tensor_product(self, self).mult;
}

Vector FiniteHopfStarAlgebra::basis_vector(Index i) const { return Vector::Unit(dim(), i); }

Vector FiniteHopfStarAlgebra::multiply(const Vector& x, const Vector& y) const {
  return mult_ * kron(column(x), column(y));
}

Matrix FiniteHopfStarAlgebra::left_multiplication(const Vector& a) const {
  return mult_ * kron(column(a), identity(dim()));
}

bool FiniteHopfStarAlgebra::is_commutative(double tol) const {
  return (mult_ * flip_matrix(dim(), dim()) - mult_).norm() <= tol * structure_scale();
}

bool FiniteHopfStarAlgebra::is_cocommutative(double tol) const {
  return (flip_matrix(dim(), dim()) * comult_ - comult_).norm() <= tol * structure_scale();
}

double FiniteHopfStarAlgebra::structure_scale() const {
  return std::max({1.0, mult_.norm(), comult_.norm(), unit_.norm(), counit_.norm(),
                   antipode_.norm(), star_.norm()});
}

FiniteHopfStarAlgebra change_basis(const FiniteHopfStarAlgebra& a, const Matrix& p) {
  const Index n = a.dim();
  require_shape(p, n, n, "change of basis");
  Eigen::FullPivLU<Matrix> lu(p);
  if (!lu.isInvertible()) throw Error(ErrorCode::InvalidArgument, "change of basis is singular");
  const Matrix pinv = lu.inverse();
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i));
  return FiniteHopfStarAlgebra(a.name() + "~", std::move(labels), pinv * a.mult() * kron(p, p),
                               kron(pinv, pinv) * a.comult() * p, pinv * a.unit(), a.counit() * p,
                               pinv * a.antipode() * p, pinv * a.star() * p.conjugate());
}

VerificationReport verify_hopf_star_axioms(const FiniteHopfStarAlgebra& a, double tol) {
  const Index n = a.dim();
  const Matrix& m = a.mult();
  const Matrix& d = a.comult();
  const Matrix u = column(a.unit());
  const Matrix eps = row(a.counit());
  const Matrix& s = a.antipode();
  const Matrix& k = a.star();
  const Matrix id = identity(n);
  const double t = tol * a.structure_scale();

  VerificationReport r;
  r.add("associativity", (m * kron(m, id) - m * kron(id, m)).norm(), t);
  r.add("unit", std::hypot((m * kron(u, id) - id).norm(), (m * kron(id, u) - id).norm()), t);
  r.add("coassociativity", (kron(d, id) * d - kron(id, d) * d).norm(), t);
  r.add("counit", std::hypot((kron(eps, id) * d - id).norm(), (kron(id, eps) * d - id).norm()), t);
  r.add("comult_multiplicative", (d * m - a.mult2() * kron(d, d)).norm(), t);
  r.add("comult_unital", (d * u - kron(u, u)).norm(), t);
  r.add("comult_star", (d * k - kron(k, k) * d.conjugate()).norm(), t);
  r.add("counit_multiplicative", (eps * m - kron(eps, eps)).norm(), t);
  r.add("counit_unital", std::abs((eps * u)(0, 0) - 1.0), t);
  r.add("counit_star", (eps * k - eps.conjugate()).norm(), t);
  r.add("star_involutive", (k * k.conjugate() - id).norm(), t);
  r.add("star_antimultiplicative", (k * m.conjugate() - m * kron(k, k) * flip_matrix(n, n)).norm(), t);
  const Matrix unit_counit = u * eps;
  r.add("antipode", std::hypot((m * kron(s, id) * d - unit_counit).norm(),
                               (m * kron(id, s) * d - unit_counit).norm()),
        t);
  r.add("antipode_involutive", (s * s - id).norm(), t);
  r.add("antipode_star", (s * k - k * s.conjugate()).norm(), t);
  return r;
}

VerificationReport is_hopf_star_automorphism(const FiniteHopfStarAlgebra& a, const Matrix& t,
                                             double tol) {
  const Index n = a.dim();
  require_shape(t, n, n, "automorphism");
  const double scaled = tol * std::max(a.structure_scale(), t.norm());
  const Eigen::VectorXd sv = singular_values(t);
  const double smallest = sv(sv.size() - 1);

  VerificationReport r;
  r.add_outcome("invertible", smallest > tol, std::max(0.0, tol - smallest), 0.0,
                "smallest singular value " + std::to_string(smallest));
  r.add("multiplicative", (t * a.mult() - a.mult() * kron(t, t)).norm(), scaled);
  r.add("comultiplicative", (a.comult() * t - kron(t, t) * a.comult()).norm(), scaled);
  r.add("unital", (t * a.unit() - a.unit()).norm(), scaled);
  r.add("counital", (a.counit() * t - a.counit()).norm(), scaled);
  r.add("star", (t * a.star() - a.star() * t.conjugate()).norm(), scaled);
  r.add("antipode", (a.antipode() * t - t * a.antipode()).norm(), scaled);
  return r;
}

}  // namespace fqg
