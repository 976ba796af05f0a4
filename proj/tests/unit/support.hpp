#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fqg/linalg.hpp"

namespace fqg::test {

inline std::string data_path(const std::string& name) { return std::string(FQG_TEST_DATA_DIR) + "/" + name; }

/// Seeded generator shared by the property tests; every case draws its own
/// stream so adding a case does not perturb the others.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Matrix random_matrix(std::mt19937_64& gen, Index rows, Index cols) {
  std::normal_distribution<double> d(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(d(gen), d(gen));
  }
  return m;
}

inline Vector random_vector(std::mt19937_64& gen, Index n) { return random_matrix(gen, n, 1); }

/// Haar-ish random unitary from the QR factor of a Gaussian matrix.
inline Matrix random_unitary(std::mt19937_64& gen, Index n) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(gen, n, n));
  return qr.householderQ() * Matrix::Identity(n, n);
}

/// Entry-wise oracle for a two-leg operator x placed on legs (p, q)
/// (0-based, either order) of a three-leg space with dimensions `dims`:
/// X_pq[(i1,i2,i3),(j1,j2,j3)] = x[(i_p,i_q),(j_p,j_q)] · δ(i_r, j_r).
inline Matrix embed_two_of_three(const Matrix& x, const std::vector<Index>& dims, int p, int q) {
  const int r = 3 - p - q;
  const Index total = dims[0] * dims[1] * dims[2];
  Matrix out = Matrix::Zero(total, total);
  for (Index row = 0; row < total; ++row) {
    const Index i[3] = {row / (dims[1] * dims[2]), (row / dims[2]) % dims[1], row % dims[2]};
    for (Index col = 0; col < total; ++col) {
      const Index j[3] = {col / (dims[1] * dims[2]), (col / dims[2]) % dims[1], col % dims[2]};
      if (i[r] != j[r]) continue;
      out(row, col) = x(i[p] * dims[q] + i[q], j[p] * dims[q] + j[q]);
    }
  }
  return out;
}

/// ‖W₂₃W₁₂W₂₃* − W₁₂W₁₃‖ assembled entry by entry.
inline double pentagon_oracle(const Matrix& w, Index n) {
  const std::vector<Index> dims{n, n, n};
  const Matrix w12 = embed_two_of_three(w, dims, 0, 1);
  const Matrix w13 = embed_two_of_three(w, dims, 0, 2);
  const Matrix w23 = embed_two_of_three(w, dims, 1, 2);
  return (w23 * w12 * w23.adjoint() - w12 * w13).norm();
}

/// Entry-wise oracle for an operator on legs `xdims` placed on the 0-based
/// legs `placement` of a tensor product with leg dimensions `ambient`.
inline Matrix embed_oracle(const Matrix& x, const std::vector<Index>& xdims, const std::vector<int>& placement,
                           const std::vector<Index>& ambient) {
  Index total = 1;
  for (Index d : ambient) total *= d;
  auto digits = [&](Index flat) {
    std::vector<Index> out(ambient.size());
    for (int leg = static_cast<int>(ambient.size()) - 1; leg >= 0; --leg) {
      out[leg] = flat % ambient[leg];
      flat /= ambient[leg];
    }
    return out;
  };
  Matrix out = Matrix::Zero(total, total);
  for (Index row = 0; row < total; ++row) {
    const std::vector<Index> i = digits(row);
    for (Index col = 0; col < total; ++col) {
      const std::vector<Index> j = digits(col);
      bool spectators_match = true;
      for (int leg = 0; leg < static_cast<int>(ambient.size()); ++leg) {
        if (std::find(placement.begin(), placement.end(), leg) == placement.end() && i[leg] != j[leg]) {
          spectators_match = false;
        }
      }
      if (!spectators_match) continue;
      Index xr = 0, xc = 0;
      for (std::size_t t = 0; t < placement.size(); ++t) {
        xr = xr * xdims[t] + i[placement[t]];
        xc = xc * xdims[t] + j[placement[t]];
      }
      out(row, col) = x(xr, xc);
    }
  }
  return out;
}

}  // namespace fqg::test
