#include <doctest.h>

#include <string>

#include "fqg/builders.hpp"
#include "fqg/error.hpp"
#include "fqg/multiplicative_unitary.hpp"
#include "support.hpp"

using namespace fqg;

namespace {

struct Built {
  FiniteHopfStarAlgebra algebra;
  MultiplicativeUnitary w;
};

Built build(const FiniteHopfStarAlgebra& a) {
  const GnsData g = gns_construct(a, compute_haar(a));
  return {a, build_W(a, g)};
}

/// W|a,b⟩ = |a, ab⟩ on the orthonormal basis {u_g} of ℂ[G].
Matrix group_algebra_w(const CayleyTable& g) {
  const Index n = g.order();
  Matrix w = Matrix::Zero(n * n, n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) w(a * n + g.multiply(a, b), a * n + b) = 1.0;
  }
  return w;
}

/// W|a,b⟩ = |ab⁻¹, b⟩ on the normalized basis {√|G| δ_g} of C(G).
Matrix function_algebra_w(const CayleyTable& g) {
  const Index n = g.order();
  Matrix w = Matrix::Zero(n * n, n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) w(g.multiply(a, g.inverse(b)) * n + b, a * n + b) = 1.0;
  }
  return w;
}

Matrix swap_matrix(Index n) {
  Matrix s = Matrix::Zero(n * n, n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) s(j * n + i, i * n + j) = 1.0;
  }
  return s;
}

}  // namespace

TEST_SUITE("multiplicative_unitary") {
  TEST_CASE("W of the group algebra of Z2 is the CNOT permutation") {
    const Built b = build(preset("kz2"));
    Matrix cnot = Matrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    CHECK((b.w.w().matrix() - cnot).norm() <= 1e-14);
    CHECK(b.w.w().dims() == std::vector<Index>{2, 2});
  }

  TEST_CASE("W of group algebras is the permutation |a,b> -> |a,ab>") {
    for (const char* name : {"kz3", "kz5", "ks3"}) {
      CAPTURE(name);
      const PresetAlgebra p = describe_preset(name);
      const Built b = build(p.algebra);
      CHECK((b.w.w().matrix() - group_algebra_w(*p.group)).norm() < 1e-12);
    }
  }

  TEST_CASE("W of function algebras is the permutation |a,b> -> |ab^-1,b>") {
    for (const char* name : {"fz2", "fz3", "fz4", "fs3"}) {
      CAPTURE(name);
      const PresetAlgebra p = describe_preset(name);
      const Built b = build(p.algebra);
      CHECK((b.w.w().matrix() - function_algebra_w(*p.group)).norm() < 1e-12);
    }
    // the two Z₂ unitaries differ as operators on the same space
    CHECK((build(preset("fz2")).w.w().matrix() - build(preset("kz2")).w.w().matrix()).norm() > 1.0);
  }

  TEST_CASE("pentagon residual agrees with the entry-wise oracle") {
    auto gen = test::rng(51);
    for (Index n : {2, 3}) {
      for (int trial = 0; trial < 3; ++trial) {
        const Matrix u = test::random_unitary(gen, n * n);
        const double ours = verify_pentagon(TensorOperator({n, n}, u)).find("pentagon")->residual;
        CHECK(ours == doctest::Approx(test::pentagon_oracle(u, n)).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("SWAP is not a multiplicative unitary") {
    const Matrix s = swap_matrix(2);
    const VerificationReport r = verify_pentagon(TensorOperator({2, 2}, s));
    CHECK_FALSE(r.overall_pass());
    CHECK(r.find("pentagon")->residual > 0.5);
    CHECK(r.find("pentagon")->residual == doctest::Approx(test::pentagon_oracle(s, 2)));
    CHECK(verify_unitarity(TensorOperator({2, 2}, s)).overall_pass());
  }

  TEST_CASE("property: random unitaries violate the pentagon equation") {
    auto gen = test::rng(52);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix u = test::random_unitary(gen, 4);
      CHECK(verify_pentagon(TensorOperator({2, 2}, u)).find("pentagon")->residual > 0.1);
    }
  }

  TEST_CASE("non-unitary operators are flagged") {
    auto gen = test::rng(53);
    const TensorOperator x({2, 2}, test::random_matrix(gen, 4, 4));
    const VerificationReport r = verify_unitarity(x);
    CHECK_FALSE(r.find("isometry")->pass);
    CHECK_FALSE(r.find("coisometry")->pass);
  }

  TEST_CASE("full multiplicative unitary suite on every preset") {
    for (const std::string& name : preset_names()) {
      CAPTURE(name);
      const Built b = build(preset(name));
      const Index n = b.algebra.dim();
      CHECK(b.w.expansion_residual() < 1e-12);
      CHECK(verify_unitarity(b.w.w()).max_residual() <= 1e-10);
      CHECK(verify_pentagon(b.w.w()).max_residual() <= 1e-10);
      CHECK(test::pentagon_oracle(b.w.w().matrix(), n) <= 1e-10);
      CHECK(verify_inverse_via_antipode(b.w).overall_pass());
      CHECK(verify_left_slices_span_A(b.w).overall_pass());
      CHECK(verify_antipode_relation(b.w).overall_pass());
      for (Index i = 0; i < n; ++i) CHECK(comultiplication_via_W(b.w, b.algebra.basis_vector(i)).overall_pass());
      const DualSubspace d = build_dual_subspace(b.w);
      CHECK(d.dim() == n);
      CHECK(d.report.overall_pass());
      CHECK(verify_dual_comultiplication(b.w, d).overall_pass());
    }
  }

  TEST_CASE("inverse via antipode equals the adjoint") {
    for (const char* name : {"ks3", "fs3"}) {
      CAPTURE(name);
      const Built b = build(preset(name));
      const TensorOperator inv = build_W_inverse_via_antipode(b.algebra, b.w.gns());
      CHECK(op_distance(inv, b.w.w().adjoint()) < 1e-12);
    }
  }

  TEST_CASE("left slices of W for a group algebra are the translations") {
    // (ω_{e_a, e_b}⊗id)W = δ_{ab} L(u_a) since W|a,b⟩ = |a,ab⟩
    const PresetAlgebra p = describe_preset("kz3");
    const Built b = build(p.algebra);
    for (Index a = 0; a < 3; ++a) {
      const Matrix s = slice(b.w.w(), SliceSide::Left, VectorFunctional::matrix_unit(3, a, a));
      CHECK((s - b.w.gns().left_regular[a]).norm() < 1e-12);
      CHECK(slice(b.w.w(), SliceSide::Left, VectorFunctional::matrix_unit(3, a, (a + 1) % 3)).norm() < 1e-12);
    }
  }

  TEST_CASE("dual comultiplication on the dual subspace") {
    const Built b = build(preset("fs3"));
    const DualSubspace d = build_dual_subspace(b.w);
    // Δ̂(𝟙) = 𝟙⊗𝟙
    const DualComultiplication one = dual_comultiplication(b.w, d, Matrix::Identity(6, 6));
    CHECK((one.value.matrix() - Matrix::Identity(36, 36)).norm() < 1e-10);
    CHECK(one.report.overall_pass());
    // an operator outside Â is rejected
    Matrix e01 = Matrix::Zero(6, 6);
    e01(0, 1) = 1.0;
    const Matrix outside = e01 + b.w.gns().left_regular[3];
    if (!d.contains(outside, 1e-9)) {
      CHECK_THROWS_WITH_AS(dual_comultiplication(b.w, d, outside), doctest::Contains("NotInDualSubspace"), Error);
    }
  }

  TEST_CASE("property: a random change of basis gives an equivalent multiplicative unitary") {
    auto gen = test::rng(54);
    for (const char* name : {"kz3", "fs3"}) {
      CAPTURE(name);
      const FiniteHopfStarAlgebra a = preset(name);
      const Built original = build(a);
      const Matrix p = Matrix::Identity(a.dim(), a.dim()) + 0.3 * test::random_matrix(gen, a.dim(), a.dim());
      const Built moved = build(change_basis(a, p));
      CHECK(verify_pentagon(moved.w.w()).max_residual() < 1e-9);
      CHECK(verify_unitarity(moved.w.w()).max_residual() < 1e-9);
      // unitarily equivalent operators have equal power traces
      Matrix p1 = original.w.w().matrix(), p2 = moved.w.w().matrix();
      for (int k = 1; k <= 4; ++k) {
        CHECK(std::abs(p1.trace() - p2.trace()) < 1e-8);
        p1 = p1 * original.w.w().matrix();
        p2 = p2 * moved.w.w().matrix();
      }
    }
  }
}
