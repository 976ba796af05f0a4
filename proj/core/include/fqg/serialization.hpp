#pragma once

#include <filesystem>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "fqg/group.hpp"
#include "fqg/hopf.hpp"
#include "fqg/report.hpp"

namespace fqg {

inline constexpr int kFormatVersion = 1;

/// Algebra file format (format_version 1): "name", "dim", "basis", and sparse
/// entry lists with 0-based indices, omitted entries zero:
///   "mult"     [[i,j,k,re,im]]  e_i e_j   = Σ_k m[i][j][k] e_k
///   "comult"   [[i,j,k,re,im]]  Δ(e_i)    = Σ d[i][j][k] e_j⊗e_k
///   "unit"     [[i,re,im]]      𝟙         = Σ u_i e_i
///   "counit"   [[i,re,im]]      ε(e_i)
///   "antipode" [[i,j,re,im]]    S(e_i)    = Σ_j s[i][j] e_j
///   "star"     [[i,j,re,im]]    e_i*      = Σ_j σ[i][j] e_j
/// Unknown fields are rejected. Throws ParseError / SchemaVersionMismatch.
FiniteHopfStarAlgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const FiniteHopfStarAlgebra& a);
FiniteHopfStarAlgebra load_algebra(const std::filesystem::path& path);
/// Throws IoError when the file cannot be written.
void save_algebra(const FiniteHopfStarAlgebra& a, const std::filesystem::path& path);

/// {"format_version":1, "labels":[...], "table":[[...]]} or a bare table.
CayleyTable cayley_from_json(const std::string& text);

/// Sparse matrix entries (i, j, value) meaning θ(e_i) = Σ_j value e_j.
using SparseEntries = std::vector<std::tuple<Index, Index, Complex>>;

struct ActionSpec {
  std::string algebra;                            ///< preset name or path
  std::variant<std::string, CayleyTable> group;   ///< preset name, path, or inline table
  std::variant<std::string, std::vector<SparseEntries>> automorphisms;  ///< preset or per-element matrices
};

/// {"format_version":1, "algebra":..., "group": <preset|path|{"table":...}>,
///  "automorphisms": "inversion"|"conjugation"|[[[i,j,re,im],...], ...]}.
ActionSpec action_spec_from_json(const std::string& text);
/// {"format_version":1, "automorphisms":[...]} or a bare list of entry lists.
std::vector<SparseEntries> automorphisms_from_json(const std::string& text);
/// Dense operator-form matrices (column i = θ(e_i)) of dimension n.
std::vector<Matrix> materialize(const std::vector<SparseEntries>& entries, Index n);

std::string read_text_file(const std::filesystem::path& path);

/// Stable 64-bit FNV-1a digest, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace fqg
