#include <doctest.h>

#include <string>

#include "fqg/builders.hpp"
#include "fqg/dual.hpp"
#include "fqg/error.hpp"
#include "support.hpp"

using namespace fqg;

namespace {

struct Built {
  FiniteHopfStarAlgebra algebra;
  Functional h;
  MultiplicativeUnitary w;
  DualSubspace dual;
};

Built build(const FiniteHopfStarAlgebra& a) {
  const Functional h = compute_haar(a);
  MultiplicativeUnitary w = build_W(a, gns_construct(a, h));
  DualSubspace d = build_dual_subspace(w);
  return {a, h, std::move(w), std::move(d)};
}

bool same_tensors(const FiniteHopfStarAlgebra& x, const FiniteHopfStarAlgebra& y) {
  return x.mult() == y.mult() && x.comult() == y.comult() && x.unit() == y.unit() && x.counit() == y.counit() &&
         x.antipode() == y.antipode() && x.star() == y.star();
}

}  // namespace

TEST_SUITE("dual") {
  TEST_CASE("dual of a group algebra is the function algebra in the dual basis") {
    for (const char* g : {"z2", "z3", "s3"}) {
      CAPTURE(g);
      const CayleyTable group = group_preset(g);
      CHECK(same_tensors(build_dual(group_algebra(group)), function_algebra(group)));
      CHECK(same_tensors(build_dual(function_algebra(group)), group_algebra(group)));
    }
    const FiniteHopfStarAlgebra d = dual_concrete(preset("kz2"));
    CHECK(d.basis_labels() == std::vector<std::string>{"d(u_0)", "d(u_1)"});
  }

  TEST_CASE("double dual reproduces every preset exactly") {
    for (const std::string& name : preset_names()) {
      CAPTURE(name);
      const FiniteHopfStarAlgebra a = preset(name);
      CHECK(same_tensors(build_dual(build_dual(a)), a));
      CHECK(verify_hopf_star_axioms(build_dual(a)).overall_pass());
    }
  }

  TEST_CASE("commutativity is exchanged with cocommutativity") {
    const FiniteHopfStarAlgebra dfs3 = build_dual(preset("fs3"));
    const FiniteHopfStarAlgebra dks3 = build_dual(preset("ks3"));
    CHECK_FALSE(dfs3.is_commutative());
    CHECK(dfs3.is_cocommutative());
    CHECK(dks3.is_commutative());
    // an explicit noncommuting pair in the dual of C(S₃)
    double worst = 0.0;
    for (Index i = 0; i < 6; ++i) {
      for (Index j = 0; j < 6; ++j) {
        const Vector ei = dfs3.basis_vector(i), ej = dfs3.basis_vector(j);
        worst = std::max(worst, (dfs3.multiply(ei, ej) - dfs3.multiply(ej, ei)).norm());
      }
    }
    CHECK(worst > 0.5);
    CHECK(preset("dual:fs3").dim() == 6);
  }

  TEST_CASE("convolution of dual basis functionals of a group algebra") {
    // (e^i * e^j)(u_g) = e^i(u_g) e^j(u_g), so e^i * e^j = δ_ij e^i
    const FiniteHopfStarAlgebra a = preset("kz3");
    for (Index i = 0; i < 3; ++i) {
      for (Index j = 0; j < 3; ++j) {
        const Functional c = convolve(a, Functional(Vector::Unit(3, i)), Functional(Vector::Unit(3, j)));
        const Vector expected = i == j ? Vector(Vector::Unit(3, i)) : Vector(Vector::Zero(3));
        CHECK((c.coords() - expected).norm() == 0.0);
      }
    }
  }

  TEST_CASE("property: dual adjoint is conj(phi(S(x)*))") {
    auto gen = test::rng(61);
    for (const char* name : {"ks3", "fs3", "kz4"}) {
      CAPTURE(name);
      const FiniteHopfStarAlgebra a = preset(name);
      for (int trial = 0; trial < 4; ++trial) {
        const Functional phi(test::random_vector(gen, a.dim()));
        const Functional adj = dual_adjoint(a, phi);
        for (Index k = 0; k < a.dim(); ++k) {
          const Complex expected = std::conj(phi(a.adjoint(a.apply_antipode(a.basis_vector(k)))));
          CHECK(std::abs(adj.coords()(k) - expected) < 1e-12);
        }
      }
    }
  }

  TEST_CASE("Fourier matrices by hand") {
    const PresetAlgebra k = describe_preset("ks3");
    const Matrix fk = fourier_matrix(k.algebra, compute_haar(k.algebra));
    for (Index b = 0; b < 6; ++b) {
      for (Index j = 0; j < 6; ++j) {
        const double expected = k.group->multiply(b, j) == k.group->identity() ? 1.0 : 0.0;
        CHECK(std::abs(fk(b, j) - expected) < 1e-12);
      }
    }
    const FiniteHopfStarAlgebra f = preset("fz4");
    const Matrix ff = fourier_matrix(f, compute_haar(f));
    CHECK((ff - 0.25 * Matrix::Identity(4, 4)).norm() < 1e-12);
  }

  TEST_CASE("G is a *-isomorphism onto the dual subspace on every preset") {
    for (const std::string& name : preset_names()) {
      CAPTURE(name);
      const Built b = build(preset(name));
      const VerificationReport r = verify_G_isomorphism(b.w, b.dual);
      CHECK(r.overall_pass());
      CHECK(r.find("G_multiplicative")->residual <= 1e-11);
      CHECK(r.find("G_star")->residual <= 1e-11);
      CHECK(verify_fourier(b.algebra, b.h).overall_pass());
      CHECK(verify_gamma_closed_form(b.w, b.h).overall_pass());
    }
  }

  TEST_CASE("property: G_inverse undoes G_map") {
    auto gen = test::rng(62);
    const Built b = build(preset("fs3"));
    for (int trial = 0; trial < 5; ++trial) {
      const Functional phi(test::random_vector(gen, 6));
      const Matrix x = G_map(b.w, phi);
      CHECK((G_inverse(b.w, b.dual, x).coords() - phi.coords()).norm() < 1e-10);
    }
    CHECK((G_map(b.w, Functional(b.algebra.counit().transpose())) - Matrix::Identity(6, 6)).norm() < 1e-12);
  }

  TEST_CASE("G_inverse rejects operators outside the dual subspace") {
    const Built b = build(preset("kz3"));
    // Â for ℂ[Z₃] is diagonal in the group basis, so a matrix unit off the
    // diagonal lies outside it
    Matrix e01 = Matrix::Zero(3, 3);
    e01(0, 1) = 1.0;
    CHECK_THROWS_WITH_AS(G_inverse(b.w, b.dual, e01), doctest::Contains("NotInDualSubspace"), Error);
  }
}
