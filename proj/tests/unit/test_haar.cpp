#include <doctest.h>

#include <string>

#include "fqg/builders.hpp"
#include "fqg/error.hpp"
#include "fqg/haar.hpp"
#include "support.hpp"

using namespace fqg;

namespace {

FiniteHopfStarAlgebra with_structure(const FiniteHopfStarAlgebra& a, const Matrix& comult, const Vector& unit,
                                     const Matrix& star) {
  return FiniteHopfStarAlgebra(a.name() + "-modified", a.basis_labels(), a.mult(), comult, unit, a.counit(),
                               a.antipode(), star);
}

/// Left regular representation of ℂ[G] on the orthonormal basis {u_g}.
Matrix regular_permutation(const CayleyTable& g, Index element) {
  Matrix p = Matrix::Zero(g.order(), g.order());
  for (Index h = 0; h < g.order(); ++h) p(g.multiply(element, h), h) = 1.0;
  return p;
}

}  // namespace

TEST_SUITE("haar") {
  TEST_CASE("Haar state of group algebras is evaluation at the identity") {
    for (const char* name : {"trivial", "kz2", "kz3", "kz4", "kz5", "kz6", "ks3"}) {
      CAPTURE(name);
      const PresetAlgebra p = describe_preset(name);
      const HaarSolution sol = solve_haar(p.algebra);
      CHECK(sol.nullity == 1);
      Vector expected = Vector::Zero(p.algebra.dim());
      expected(p.group->identity()) = 1.0;
      CHECK((sol.haar.coords() - expected).norm() < 1e-12);
      CHECK(verify_haar(p.algebra, sol.haar).overall_pass());
    }
  }

  TEST_CASE("Haar state of function algebras is the uniform average") {
    for (const char* name : {"fz2", "fz3", "fz4", "fz5", "fz6", "fs3"}) {
      CAPTURE(name);
      const FiniteHopfStarAlgebra a = preset(name);
      const Functional h = compute_haar(a);
      const Vector expected = Vector::Constant(a.dim(), 1.0 / static_cast<double>(a.dim()));
      CHECK((h.coords() - expected).norm() < 1e-12);
    }
  }

  TEST_CASE("degenerate invariance systems are reported") {
    const FiniteHopfStarAlgebra kz2 = preset("kz2");
    // Δ = 0 and 𝟙 = 0: every functional is "invariant"
    CHECK_THROWS_WITH_AS(solve_haar(with_structure(kz2, Matrix::Zero(4, 2), Vector::Zero(2), kz2.star())),
                         doctest::Contains("NonUniqueHaar"), Error);
    // Δ = 0 with the usual unit: only h = 0 is invariant
    CHECK_THROWS_WITH_AS(solve_haar(with_structure(kz2, Matrix::Zero(4, 2), kz2.unit(), kz2.star())),
                         doctest::Contains("NoInvariantFunctional"), Error);
  }

  TEST_CASE("an indefinite involution is rejected by the GNS construction") {
    // C(Z₃) with δ_g* = δ_{-g} satisfies the algebraic axioms, but the Haar
    // functional is not positive: h(δ_1* δ_1) = h(δ_2 δ_1) = 0.
    const FiniteHopfStarAlgebra fz3 = preset("fz3");
    const FiniteHopfStarAlgebra twisted = with_structure(fz3, fz3.comult(), fz3.unit(), fz3.antipode());
    CHECK(verify_hopf_star_axioms(twisted).overall_pass());
    const Functional h = compute_haar(twisted);
    CHECK_THROWS_WITH_AS(gns_construct(twisted, h), doctest::Contains("NotPositive"), Error);
  }

  TEST_CASE("GNS data of group algebras is the regular representation") {
    const PresetAlgebra p = describe_preset("ks3");
    const Functional h = compute_haar(p.algebra);
    const GnsData g = gns_construct(p.algebra, h);
    CHECK((g.gram - Matrix::Identity(6, 6)).norm() < 1e-12);
    CHECK(g.min_eigenvalue == doctest::Approx(1.0));
    for (Index e = 0; e < 6; ++e) {
      CHECK((g.left_regular[e] - regular_permutation(*p.group, e)).norm() < 1e-12);
    }
    CHECK(verify_gns(p.algebra, g).overall_pass());
  }

  TEST_CASE("GNS data of function algebras is diagonal") {
    const FiniteHopfStarAlgebra a = preset("fz4");
    const GnsData g = gns_construct(a, compute_haar(a));
    CHECK((g.gram - 0.25 * Matrix::Identity(4, 4)).norm() < 1e-12);
    CHECK(g.min_eigenvalue == doctest::Approx(0.25));
    for (Index e = 0; e < 4; ++e) {
      Matrix unit = Matrix::Zero(4, 4);
      unit(e, e) = 1.0;
      CHECK((g.left_regular[e] - unit).norm() < 1e-12);
    }
    // ‖δ_g‖² = 1/4 in the GNS norm
    CHECK(g.to_hilbert(a.basis_vector(2)).norm() == doctest::Approx(0.5));
  }

  TEST_CASE("every preset has a positive faithful tracial Haar state") {
    for (const std::string& name : preset_names()) {
      CAPTURE(name);
      const FiniteHopfStarAlgebra a = preset(name);
      const Functional h = compute_haar(a);
      const GnsData g = gns_construct(a, h);
      CHECK(g.min_eigenvalue > 0.1 / static_cast<double>(a.dim()));
      CHECK(verify_gns(a, g).overall_pass());
      CHECK(verify_trace(a, h).overall_pass());
      CHECK((haar_from_gns(a, g).coords() - h.coords()).norm() < 1e-12);
    }
  }

  TEST_CASE("property: algebra coordinates invert left multiplication") {
    auto gen = test::rng(41);
    for (const char* name : {"kz3", "fs3", "dual:fs3"}) {
      CAPTURE(name);
      const FiniteHopfStarAlgebra a = preset(name);
      const GnsData g = gns_construct(a, compute_haar(a));
      for (int trial = 0; trial < 5; ++trial) {
        const Vector x = test::random_vector(gen, a.dim());
        const Matrix op = left_multiplication_matrix(a, g, x);
        CHECK((algebra_coordinates(g, op) - x).norm() < 1e-10);
        // the GNS representation is a *-representation
        CHECK((left_multiplication_matrix(a, g, a.adjoint(x)) - op.adjoint()).norm() < 1e-10);
      }
    }
  }

  TEST_CASE("operators outside the algebra have no coordinates") {
    auto gen = test::rng(42);
    const FiniteHopfStarAlgebra a = preset("fz3");
    const GnsData g = gns_construct(a, compute_haar(a));
    Matrix off_diagonal = Matrix::Zero(3, 3);
    off_diagonal(0, 1) = 1.0;
    CHECK_THROWS_AS(algebra_coordinates(g, off_diagonal), Error);
    CHECK_THROWS_AS(algebra_coordinates(g, test::random_matrix(gen, 2, 2)), Error);
  }
}
