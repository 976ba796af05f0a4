#include "fqg/actions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "fqg/error.hpp"

namespace fqg {
namespace {

/// Δ_K(δ_k) = Σ_{rs=k} δ_r⊗δ_s as an m² × m matrix.
Matrix group_comultiplication(const CayleyTable& group) {
  const Index m = group.order();
  Matrix d = Matrix::Zero(m * m, m);
  for (Index r = 0; r < m; ++r) {
    for (Index s = 0; s < m; ++s) d(r * m + s, group.multiply(r, s)) = 1.0;
  }
  return d;
}

/// S_K(δ_k) = δ_{k⁻¹}.
Matrix group_antipode(const CayleyTable& group) {
  const Index m = group.order();
  Matrix s = Matrix::Zero(m, m);
  for (Index k = 0; k < m; ++k) s(group.inverse(k), k) = 1.0;
  return s;
}

Matrix diagonal_unit(Index m, Index k) {
  Matrix e = Matrix::Zero(m, m);
  e(k, k) = 1.0;
  return e;
}

/// Greedy orthonormal basis of the span of `vectors`, dropping anything whose
/// component outside the current span is at most `cutoff`.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, double cutoff) {
  std::vector<Vector> basis;
  for (const Vector& v : vectors) {
    Vector r = v;
    for (const Vector& b : basis) r -= b.dot(r) * b;
    for (const Vector& b : basis) r -= b.dot(r) * b;
    const double norm = r.norm();
    if (norm > cutoff) basis.push_back(r / norm);
  }
  return basis;
}

/// Dimension of the unital *-algebra of functions on m points generated by
/// `generators` under pointwise operations.
Index generated_dimension(const std::vector<Vector>& generators, Index m, double cutoff) {
  std::vector<Vector> pool{Vector::Ones(m)};
  for (const Vector& g : generators) {
    pool.push_back(g);
    pool.push_back(g.conjugate());
  }
  std::vector<Vector> basis = span_basis(pool, cutoff);
  for (std::size_t previous = 0; previous != basis.size();) {
    previous = basis.size();
    std::vector<Vector> grown = basis;
    for (std::size_t i = 0; i < previous; ++i) {
      for (std::size_t j = i; j < previous; ++j) grown.push_back(basis[i].cwiseProduct(basis[j]));
    }
    basis = span_basis(grown, cutoff);
  }
  return static_cast<Index>(basis.size());
}

Index distinct_automorphisms(const std::vector<Matrix>& theta, double tol) {
  std::vector<const Matrix*> seen;
  for (const Matrix& t : theta) {
    const bool repeated =
        std::any_of(seen.begin(), seen.end(), [&](const Matrix* s) { return (*s - t).norm() <= tol; });
    if (!repeated) seen.push_back(&t);
  }
  return static_cast<Index>(seen.size());
}

double w_scale(const MultiplicativeUnitary& w) { return std::max(1.0, w.w().norm()); }

/// Σ_k γ(X_k)⊗L_k on legs [n, |K|, n].
TensorOperator gamma_side(const Matrix& gamma, const MultiplicativeUnitary& w, const DualSubspace& dual,
                          Index m) {
  const Index n = w.dim();
  Matrix out = Matrix::Zero(n * m * n, n * m * n);
  for (Index k = 0; k < n; ++k) {
    const TensorOperator g = gamma_operator(gamma, dual, m, Vector::Unit(n, k));
    out += kron(g.matrix(), w.gns().left_regular[k]);
  }
  return TensorOperator({n, m, n}, std::move(out));
}

/// β(x) ∈ C(K)⊗𝖠 on legs [|K|, n] for algebra coordinates x.
Matrix beta_operator(const Matrix& beta, const GnsData& gns, Index m, const Vector& x) {
  const Index n = gns.dim();
  const Vector image = beta * x;
  Matrix out = Matrix::Zero(m * n, m * n);
  for (Index c = 0; c < m; ++c) {
    for (Index i = 0; i < n; ++i) {
      const Complex v = image(c * n + i);
      if (v != Complex(0.0)) out += v * kron(diagonal_unit(m, c), gns.left_regular[i]);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Index>> enumerate_group_automorphisms(const CayleyTable& group) {
  const Index m = group.order();
  const Index e = group.identity();
  std::vector<Index> image(m, -1);
  std::vector<bool> used(m, false);
  image[e] = e;
  used[e] = true;
  std::vector<std::vector<Index>> out;

  // Every product whose factors and result all have images must be respected.
  auto consistent = [&]() {
    for (Index a = 0; a < m; ++a) {
      if (image[a] < 0) continue;
      for (Index b = 0; b < m; ++b) {
        if (image[b] < 0) continue;
        const Index ab = group.multiply(a, b);
        if (image[ab] >= 0 && image[ab] != group.multiply(image[a], image[b])) return false;
      }
    }
    return true;
  };

  std::function<void(Index)> extend = [&](Index g) {
    if (g == m) {
      out.push_back(image);
      return;
    }
    if (g == e) {
      extend(g + 1);
      return;
    }
    for (Index candidate = 0; candidate < m; ++candidate) {
      if (used[candidate]) continue;
      image[g] = candidate;
      used[candidate] = true;
      if (consistent()) extend(g + 1);
      used[candidate] = false;
      image[g] = -1;
    }
  };
  extend(0);
  return out;
}

std::vector<Matrix> automorphism_preset(const std::string& name, const PresetAlgebra& algebra,
                                        const CayleyTable& group) {
  const FiniteHopfStarAlgebra& a = algebra.algebra;
  const Index n = a.dim();
  const Index m = group.order();
  if (name == "trivial") return std::vector<Matrix>(m, Matrix::Identity(n, n));
  if (name == "inversion") {
    if (m > 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "the inversion family needs a group of order at most 2, got order " + std::to_string(m));
    }
    std::vector<Matrix> theta(m, a.antipode());
    theta[group.identity()] = Matrix::Identity(n, n);
    return theta;
  }
  if (name == "conjugation") {
    const bool group_based = algebra.kind == PresetKind::GroupAlgebra || algebra.kind == PresetKind::FunctionAlgebra;
    if (!group_based || !algebra.group || !(*algebra.group == group)) {
      throw Error(ErrorCode::InvalidArgument,
                  "conjugation needs a group or function algebra preset built on the acting group");
    }
    std::vector<Matrix> theta;
    for (Index k = 0; k < m; ++k) {
      std::vector<Index> perm(m);
      for (Index g = 0; g < m; ++g) perm[g] = group.multiply(group.multiply(k, g), group.inverse(k));
      theta.push_back(permutation_operator(perm));
    }
    return theta;
  }
  throw Error(ErrorCode::UnknownPreset, "unknown automorphism family '" + name + "'");
}

FiniteGroupAction::FiniteGroupAction(FiniteHopfStarAlgebra algebra, CayleyTable group, std::vector<Matrix> theta,
                                     Matrix alpha, VerificationReport report)
    : algebra_(std::move(algebra)),
      group_(std::move(group)),
      theta_(std::move(theta)),
      alpha_(std::move(alpha)),
      report_(std::move(report)) {}

bool FiniteGroupAction::is_trivial(double tol) const {
  const Index n = algebra_.dim();
  return std::all_of(theta_.begin(), theta_.end(),
                     [&](const Matrix& t) { return (t - Matrix::Identity(n, n)).norm() <= tol; });
}

FiniteGroupAction build_group_action(const FiniteHopfStarAlgebra& a, const CayleyTable& group,
                                     std::vector<Matrix> theta, double tol) {
  const Index n = a.dim();
  const Index m = group.order();
  if (static_cast<Index>(theta.size()) != m) {
    throw Error(ErrorCode::DimensionMismatch, "need one automorphism per group element: got " +
                                                  std::to_string(theta.size()) + " for order " + std::to_string(m));
  }
  for (Index k = 0; k < m; ++k) {
    if (theta[k].rows() != n || theta[k].cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "automorphism " + std::to_string(k) + " is not " +
                                                    std::to_string(n) + "x" + std::to_string(n));
    }
  }
  const double t = tol * std::max(1.0, a.structure_scale());
  const auto& labels = group.labels();
  VerificationReport r;

  const double identity_defect = (theta[group.identity()] - Matrix::Identity(n, n)).norm();
  double hom_defect = 0.0;
  Index bad_j = -1, bad_k = -1;
  for (Index j = 0; j < m; ++j) {
    for (Index k = 0; k < m; ++k) {
      const double d = (theta[j] * theta[k] - theta[group.multiply(j, k)]).norm();
      if (d > hom_defect) {
        hom_defect = d;
        bad_j = j;
        bad_k = k;
      }
    }
  }
  r.add("theta_identity", identity_defect, t);
  r.add("theta_homomorphism", hom_defect, t);
  if (identity_defect > t) {
    throw Error(ErrorCode::NotAHomomorphism, "θ of the identity is not the identity map");
  }
  if (hom_defect > t) {
    throw Error(ErrorCode::NotAHomomorphism, "θ_" + labels[bad_j] + "∘θ_" + labels[bad_k] + " differs from θ_" +
                                                 labels[group.multiply(bad_j, bad_k)] + " by " +
                                                 std::to_string(hom_defect));
  }

  for (Index k = 0; k < m; ++k) {
    const VerificationReport aut = is_hopf_star_automorphism(a, theta[k], tol);
    r.merge(aut, "automorphism[" + labels[k] + "].");
    if (!aut.overall_pass()) {
      std::string failing;
      for (const Check& c : aut.checks()) {
        if (!c.pass) {
          failing = c.name;
          break;
        }
      }
      throw Error(ErrorCode::NotAnAutomorphism, "θ_" + labels[k] + " fails the '" + failing + "' check");
    }
  }

  Matrix alpha = Matrix::Zero(n * m, n);
  for (Index k = 0; k < m; ++k) {
    for (Index p = 0; p < n; ++p) alpha.row(p * m + k) = theta[k].row(p);
  }

  const Matrix lhs = kron(alpha, Matrix::Identity(m, m)) * alpha;
  const Matrix rhs = kron(Matrix::Identity(n, n), group_comultiplication(group)) * alpha;
  const double coaction_defect = (lhs - rhs).norm();
  r.add("coaction_axiom", coaction_defect, t);
  if (coaction_defect > t) {
    throw Error(ErrorCode::CoactionAxiomFailed,
                "(α⊗id)α differs from (id⊗Δ_K)α by " + std::to_string(coaction_defect));
  }
  r.merge(check_star_homomorphism(alpha, a.algebra(), tensor_product(a.algebra(), function_algebra_structure(m)), t),
          "alpha_");

  // α(e_i)(𝟙⊗δ_c) for all i, c
  Matrix density(n * m, n * m);
  for (Index i = 0; i < n; ++i) {
    for (Index c = 0; c < m; ++c) {
      Vector col = Vector::Zero(n * m);
      for (Index p = 0; p < n; ++p) col(p * m + c) = alpha(p * m + c, i);
      density.col(i * m + c) = col;
    }
  }
  const Index rank = numerical_rank(density, tol);
  r.add_outcome("density", rank == n * m, static_cast<double>(n * m - rank), 0.0,
                "rank " + std::to_string(rank) + " of " + std::to_string(n * m));

  return FiniteGroupAction(a, group, std::move(theta), std::move(alpha), std::move(r));
}

VerificationReport verify_haar_invariance(const FiniteGroupAction& action, const Functional& h, double tol) {
  const FiniteHopfStarAlgebra& a = action.algebra();
  const Index n = a.dim();
  const Index m = action.group_order();
  double worst = 0.0;
  for (Index i = 0; i < n; ++i) {
    Vector defect(m);
    for (Index k = 0; k < m; ++k) defect(k) = h(action.theta()[k].col(i)) - h(a.basis_vector(i));
    worst = std::max(worst, defect.norm());
  }
  VerificationReport r;
  r.add("haar_invariance", worst, tol * std::max(1.0, a.structure_scale()));
  return r;
}

VerificationReport verify_strong_right_invariance(const FiniteGroupAction& action, const Functional& h, double tol,
                                                  GroupAntipode antipode) {
  const FiniteHopfStarAlgebra& a = action.algebra();
  const CayleyTable& group = action.group();
  const Index n = a.dim();
  const Index m = group.order();
  const auto& theta = action.theta();
  auto s_k = [&](Index k) { return antipode == GroupAntipode::Inverse ? group.inverse(k) : k; };

  double worst = 0.0;
  std::string witness;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Vector defect(m);
      for (Index k = 0; k < m; ++k) {
        const Complex lhs = h(a.multiply(theta[k].col(i), a.basis_vector(j)));
        const Complex rhs = h(a.multiply(a.basis_vector(i), theta[s_k(k)].col(j)));
        defect(k) = lhs - rhs;
      }
      if (defect.norm() > worst) {
        worst = defect.norm();
        witness = "worst pair (" + a.basis_labels()[i] + ", " + a.basis_labels()[j] + ")";
      }
    }
  }

  // a⊗δ_c ↦ α(a)(𝟙⊗δ_c) = θ_c(a)⊗δ_c and a⊗δ_c ↦ ((id⊗S_K)α(a))(𝟙⊗δ_c)
  Matrix forward = Matrix::Zero(n * m, n * m);
  Matrix backward = Matrix::Zero(n * m, n * m);
  for (Index c = 0; c < m; ++c) {
    Index partner = -1;
    for (Index k = 0; k < m; ++k) {
      if (s_k(k) == c) partner = k;
    }
    for (Index i = 0; i < n; ++i) {
      for (Index p = 0; p < n; ++p) {
        forward(p * m + c, i * m + c) = theta[c](p, i);
        if (partner >= 0) backward(p * m + c, i * m + c) = theta[partner](p, i);
      }
    }
  }
  const Matrix id = Matrix::Identity(n * m, n * m);
  const double t = tol * std::max(1.0, a.structure_scale());
  VerificationReport r;
  r.add("strong_right_invariance", worst, t, witness);
  r.add("inverse_maps_left", (forward * backward - id).norm(), t);
  r.add("inverse_maps_right", (backward * forward - id).norm(), t);
  return r;
}

Matrix build_beta(const FiniteGroupAction& action) {
  const Index n = action.algebra_dim();
  const Index m = action.group_order();
  return flip_matrix(n, m) * kron(Matrix::Identity(n, n), group_antipode(action.group())) * action.alpha();
}

Matrix build_beta_via_antipodes(const FiniteGroupAction& action) {
  const Index n = action.algebra_dim();
  const Index m = action.group_order();
  const Matrix& s = action.algebra().antipode();
  return flip_matrix(n, m) * kron(s, group_antipode(action.group())) * action.alpha() * s;
}

VerificationReport verify_beta(const FiniteGroupAction& action, const Matrix& beta, const Matrix& beta_via_antipodes,
                               double tol) {
  const FiniteHopfStarAlgebra& a = action.algebra();
  const double t = tol * std::max(1.0, a.structure_scale());
  VerificationReport r;
  r.merge(check_star_homomorphism(
              beta, a.algebra(),
              tensor_product(function_algebra_structure(action.group_order()), a.algebra()), t),
          "beta_");
  r.add("beta_forms_agree", (beta - beta_via_antipodes).norm(), t);
  return r;
}

Matrix build_gamma(const FiniteGroupAction& action, const MultiplicativeUnitary& w, const DualSubspace& dual,
                   const Functional& h, double tol) {
  const FiniteHopfStarAlgebra& a = action.algebra();
  const Index n = a.dim();
  const Index m = action.group_order();
  if (w.dim() != n || dual.dim() != n) {
    throw Error(ErrorCode::DimensionMismatch, "action and multiplicative unitary live on different algebras");
  }
  // 𝒢 from functional coordinates to coordinates in the basis {X_j}
  Matrix g(n, n);
  for (Index k = 0; k < n; ++k) g.col(k) = dual.coordinates(G_map(w, Functional(Vector::Unit(n, k))));
  const Matrix f = fourier_matrix(a, h);
  const auto f_lu = f.fullPivLu();
  const auto g_lu = g.fullPivLu();
  if (!f_lu.isInvertible() || !g_lu.isInvertible()) {
    throw Error(ErrorCode::DimensionMismatch, "Fourier transform or G is singular");
  }
  (void)tol;
  const Matrix id_m = Matrix::Identity(m, m);
  return kron(g, id_m) * kron(f, id_m) * action.alpha() * f_lu.inverse() * g_lu.inverse();
}

TensorOperator gamma_operator(const Matrix& gamma, const DualSubspace& dual, Index group_order,
                              const Vector& coords) {
  const Index n = dual.dim();
  const Index m = group_order;
  if (gamma.rows() != n * m || gamma.cols() != n || coords.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "γ and coordinates do not match the dual subspace");
  }
  const Vector image = gamma * coords;
  const Index h = dual.basis.empty() ? 0 : dual.basis.front().rows();
  Matrix out = Matrix::Zero(h * m, h * m);
  for (Index j = 0; j < n; ++j) {
    for (Index c = 0; c < m; ++c) {
      const Complex v = image(j * m + c);
      if (v != Complex(0.0)) out += v * kron(dual.basis[j], diagonal_unit(m, c));
    }
  }
  return TensorOperator({h, m}, std::move(out));
}

VerificationReport verify_gamma(const Matrix& gamma, const DualSubspace& dual, const CayleyTable& group,
                                double tol) {
  const Index n = dual.dim();
  const Index m = group.order();
  const Index hdim = dual.basis.front().rows();
  auto op = [&](const Vector& x) { return gamma_operator(gamma, dual, m, x).matrix(); };

  double scale = 1.0;
  for (const Matrix& x : dual.basis) scale = std::max(scale, x.norm());
  const double t = tol * scale * scale;

  const double unital =
      (op(dual.coordinates(Matrix::Identity(hdim, hdim))) - Matrix::Identity(hdim * m, hdim * m)).norm();
  double multiplicative = 0.0;
  double star = 0.0;
  for (Index i = 0; i < n; ++i) {
    const Vector ei = Vector::Unit(n, i);
    const Matrix gi = op(ei);
    star = std::max(star, (op(dual.coordinates(dual.basis[i].adjoint())) - gi.adjoint()).norm());
    for (Index j = 0; j < n; ++j) {
      const Matrix prod = op(dual.coordinates(dual.basis[i] * dual.basis[j]));
      multiplicative = std::max(multiplicative, (prod - gi * op(Vector::Unit(n, j))).norm());
    }
  }
  const Matrix lhs = kron(gamma, Matrix::Identity(m, m)) * gamma;
  const Matrix rhs = kron(Matrix::Identity(n, n), group_comultiplication(group)) * gamma;

  VerificationReport r;
  r.add("gamma_unital", unital, t);
  r.add("gamma_multiplicative", multiplicative, t);
  r.add("gamma_star", star, t);
  r.add("gamma_coaction_axiom", (lhs - rhs).norm(), t);
  return r;
}

TensorOperator build_V(const MultiplicativeUnitary& w, const Matrix& beta, Index group_order) {
  const Index n = w.dim();
  const Index m = group_order;
  if (beta.rows() != m * n || beta.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "β does not match the algebra and group sizes");
  }
  Matrix out = Matrix::Zero(n * m * n, n * m * n);
  for (Index k = 0; k < n; ++k) {
    out += kron(w.expansion()[k], beta_operator(beta, w.gns(), m, Vector::Unit(n, k)));
  }
  return TensorOperator({n, m, n}, std::move(out));
}

IntertwinerData build_intertwiner(const FiniteGroupAction& action, const MultiplicativeUnitary& w,
                                  const DualSubspace& dual, const Functional& h, double tol) {
  IntertwinerData d{build_beta(action), build_beta_via_antipodes(action), Matrix(), TensorOperator::identity({1}), {}};
  d.gamma = build_gamma(action, w, dual, h, tol);
  d.v = build_V(w, d.beta, action.group_order());
  d.report.merge(verify_beta(action, d.beta, d.beta_via_antipodes, tol));
  d.report.merge(verify_gamma(d.gamma, dual, action.group(), tol));
  return d;
}

VerificationReport verify_main_intertwiner(const FiniteGroupAction& action, const MultiplicativeUnitary& w,
                                           const DualSubspace& dual, const IntertwinerData& data,
                                           const Functional& h, double tol) {
  const FiniteHopfStarAlgebra& a = action.algebra();
  const CayleyTable& group = action.group();
  const Index n = a.dim();
  const Index m = group.order();
  const TensorOperator rhs = gamma_side(data.gamma, w, dual, m);

  double sliced = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Vector defect(m);
      for (Index k = 0; k < m; ++k) {
        const Complex lhs_k = h(a.multiply(a.basis_vector(j), action.theta()[k].col(i)));
        const Complex rhs_k = h(a.multiply(action.theta()[group.inverse(k)].col(j), a.basis_vector(i)));
        defect(k) = lhs_k - rhs_k;
      }
      sliced = std::max(sliced, defect.norm());
    }
  }

  VerificationReport r;
  r.add("intertwiner", op_distance(data.v, rhs), tol * w_scale(w),
        "dimension " + std::to_string(n * m * n));
  r.add("intertwiner_sliced", sliced, tol * std::max(1.0, a.structure_scale()));
  return r;
}

CommutativityMode resolve_mode(CommutativityMode mode, Index algebra_dim, Index group_order) {
  const Index five_leg = algebra_dim * algebra_dim * group_order * algebra_dim * algebra_dim;
  if (mode == CommutativityMode::Full && five_leg > kFullModeMaxDim) {
    throw Error(ErrorCode::ModeUnavailable, "full mode needs a " + std::to_string(five_leg) +
                                                "-dimensional space, above the limit of " +
                                                std::to_string(kFullModeMaxDim));
  }
  if (mode != CommutativityMode::Auto) return mode;
  return five_leg <= kFullModeMaxDim ? CommutativityMode::Full : CommutativityMode::Sliced;
}

VerificationReport verify_slice_commutativity(const FiniteGroupAction& action, const MultiplicativeUnitary& w,
                                              const DualSubspace& dual, const IntertwinerData& data, double tol,
                                              CommutativityMode mode) {
  const FiniteHopfStarAlgebra& a = action.algebra();
  const Index n = a.dim();
  const Index m = action.group_order();
  const CommutativityMode resolved = resolve_mode(mode, n, m);
  const double t = tol * w_scale(w) * w_scale(w);
  const GnsData& gns = w.gns();
  VerificationReport r;

  // Slices (id⊗ω_pq)β(x) ∈ C(K) for x in a basis of left slices of W.
  std::vector<Vector> slice_coords;
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      Vector c(n);
      for (Index k = 0; k < n; ++k) c(k) = w.expansion()[k](p, q);
      slice_coords.push_back(c);
    }
  }
  const std::vector<Vector> left_slices = span_basis(slice_coords, tol * w_scale(w));
  std::vector<Vector> c_k_slices;
  for (const Vector& x : left_slices) {
    const Vector image = data.beta * x;
    for (Index p = 0; p < n; ++p) {
      for (Index q = 0; q < n; ++q) {
        Vector f = Vector::Zero(m);
        for (Index c = 0; c < m; ++c) {
          for (Index i = 0; i < n; ++i) f(c) += image(c * n + i) * gns.left_regular[i](p, q);
        }
        c_k_slices.push_back(f);
      }
    }
  }

  if (resolved == CommutativityMode::Full) {
    const TensorOperator v234 = embed_legs(data.v, {2, 3, 4}, {n, n, m, n, n});
    const TensorOperator v135 = embed_legs(data.v, {1, 3, 5}, {n, n, m, n, n});
    r.add("five_leg_commutator", op_distance(v234 * v135, v135 * v234), t,
          "full mode on dimension " + std::to_string(n * n * m * n * n));

    Matrix dual_side = Matrix::Zero(n * n * m * n, n * n * m * n);
    Matrix algebra_side = Matrix::Zero(n * m * n * n, n * m * n * n);
    for (Index k = 0; k < n; ++k) {
      const Vector ek = Vector::Unit(n, k);
      const Matrix beta_k = beta_operator(data.beta, gns, m, ek);
      const DualComultiplication dk = dual_comultiplication(w, dual, w.expansion()[k], tol);
      dual_side += kron(dk.value.matrix(), beta_k);

      const Vector image = data.beta * ek;
      for (Index c = 0; c < m; ++c) {
        for (Index i = 0; i < n; ++i) {
          const Complex v = image(c * n + i);
          if (v == Complex(0.0)) continue;
          Matrix delta_li = Matrix::Zero(n * n, n * n);
          for (Index p = 0; p < n; ++p) {
            for (Index q = 0; q < n; ++q) {
              const Complex d = a.comult()(p * n + q, i);
              if (d != Complex(0.0)) delta_li += d * kron(gns.left_regular[p], gns.left_regular[q]);
            }
          }
          algebra_side += v * kron(w.expansion()[k], kron(diagonal_unit(m, c), delta_li));
        }
      }
    }
    const TensorOperator v134 = embed_legs(data.v, {1, 3, 4}, {n, n, m, n});
    const TensorOperator v234b = embed_legs(data.v, {2, 3, 4}, {n, n, m, n});
    const TensorOperator v123 = embed_legs(data.v, {1, 2, 3}, {n, m, n, n});
    const TensorOperator v124 = embed_legs(data.v, {1, 2, 4}, {n, m, n, n});
    r.add("V_dual_comultiplication", (dual_side - (v134 * v234b).matrix()).norm(), t);
    r.add("V_comultiplication", (algebra_side - (v123 * v124).matrix()).norm(), t);
  } else {
    // Commutators are bilinear, so a basis of the slice span suffices.
    const std::vector<Vector> basis = span_basis(c_k_slices, tol);
    double worst = 0.0;
    for (const Vector& x : basis) {
      const Matrix dx = x.asDiagonal();
      for (const Vector& y : basis) {
        const Matrix dy = y.asDiagonal();
        worst = std::max(worst, (dx * dy - dy * dx).norm());
      }
    }
    r.add("slice_commutators", worst, t,
          "sliced mode over " + std::to_string(c_k_slices.size()) + " slices spanning dimension " +
              std::to_string(basis.size()));
  }

  const Index generated = generated_dimension(c_k_slices, m, tol);
  const Index expected = distinct_automorphisms(action.theta(), tol * std::max(1.0, a.structure_scale()));
  r.add_outcome("slices_generate", generated == expected, std::abs(static_cast<double>(generated - expected)), 0.0,
                "generated dimension " + std::to_string(generated) + ", distinct automorphisms " +
                    std::to_string(expected) + "; C(K) is commutative, so commutativity is a consistency check");
  return r;
}

}  // namespace fqg
