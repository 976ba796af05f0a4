#include "fqg/builders.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fqg/dual.hpp"
#include "fqg/error.hpp"

namespace fqg {

CayleyTable::CayleyTable(std::vector<std::vector<Index>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const Index n = order();
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidGroupTable, why); };
  if (n < 1) fail("group table is empty");
  for (const auto& r : table_) {
    if (static_cast<Index>(r.size()) != n) fail("group table is not square");
    for (Index v : r) {
      if (v < 0 || v >= n) fail("group table entry " + std::to_string(v) + " is out of range");
    }
  }
  for (Index a = 0; a < n; ++a) {
    std::vector<bool> in_row(n, false), in_col(n, false);
    for (Index b = 0; b < n; ++b) {
      if (in_row[table_[a][b]]) fail("row " + std::to_string(a) + " repeats an element (not a Latin square)");
      if (in_col[table_[b][a]]) fail("column " + std::to_string(a) + " repeats an element (not a Latin square)");
      in_row[table_[a][b]] = true;
      in_col[table_[b][a]] = true;
    }
  }
  identity_ = -1;
  for (Index e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) fail("group table has no identity element");
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          fail("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
               "," + std::to_string(c) + ")");
        }
      }
    }
  }
  inverse_.assign(n, -1);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] < 0) fail("element " + std::to_string(a) + " has no two-sided inverse");
  }
  if (labels_.empty()) {
    for (Index a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  }
  if (static_cast<Index>(labels_.size()) != n) fail("label count differs from group order");
}

bool CayleyTable::is_abelian() const {
  for (Index a = 0; a < order(); ++a) {
    for (Index b = 0; b < a; ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

CayleyTable cyclic_group(Index n) {
  if (n < 1) throw Error(ErrorCode::InvalidGroupTable, "cyclic group order must be positive");
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return CayleyTable(std::move(t));
}

CayleyTable symmetric_group_s3() {
  std::vector<std::array<Index, 3>> perms;
  std::array<Index, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const Index n = static_cast<Index>(perms.size());
  auto index_of = [&](const std::array<Index, 3>& q) {
    return static_cast<Index>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  std::vector<std::string> labels;
  for (Index a = 0; a < n; ++a) {
    labels.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
    for (Index b = 0; b < n; ++b) {
      std::array<Index, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(c);
    }
  }
  return CayleyTable(std::move(t), std::move(labels));
}

CayleyTable group_preset(const std::string& name) {
  if (name == "trivial" || name == "z1") return cyclic_group(1);
  if (name == "s3") return symmetric_group_s3();
  if (name.size() == 2 && name[0] == 'z' && name[1] >= '2' && name[1] <= '6') return cyclic_group(name[1] - '0');
  throw Error(ErrorCode::UnknownPreset, "unknown group preset '" + name + "'");
}

FiniteHopfStarAlgebra group_algebra(const CayleyTable& g, std::string name) {
  const Index n = g.order();
  Matrix mult = Matrix::Zero(n, n * n);
  Matrix comult = Matrix::Zero(n * n, n);
  Matrix antipode = Matrix::Zero(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) mult(g.multiply(a, b), a * n + b) = 1.0;
    comult(a * n + a, a) = 1.0;
    antipode(g.inverse(a), a) = 1.0;
  }
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back("u_" + l);
  return FiniteHopfStarAlgebra(std::move(name), std::move(labels), std::move(mult), std::move(comult),
                               Vector::Unit(n, g.identity()), RowVector::Ones(n), antipode, antipode);
}

FiniteHopfStarAlgebra function_algebra(const CayleyTable& g, std::string name) {
  const Index n = g.order();
  Matrix mult = Matrix::Zero(n, n * n);
  Matrix comult = Matrix::Zero(n * n, n);
  Matrix antipode = Matrix::Zero(n, n);
  for (Index a = 0; a < n; ++a) {
    mult(a, a * n + a) = 1.0;
    for (Index b = 0; b < n; ++b) comult(a * n + b, g.multiply(a, b)) = 1.0;
    antipode(g.inverse(a), a) = 1.0;
  }
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back("delta_" + l);
  RowVector counit = RowVector::Zero(n);
  counit(g.identity()) = 1.0;
  return FiniteHopfStarAlgebra(std::move(name), std::move(labels), std::move(mult), std::move(comult),
                               Vector::Ones(n), counit, antipode, Matrix::Identity(n, n));
}

FiniteHopfStarAlgebra dual_concrete(const FiniteHopfStarAlgebra& a) { return build_dual(a); }

PresetAlgebra describe_preset(const std::string& name) {
  constexpr std::string_view dual_prefix = "dual:";
  if (name.rfind(dual_prefix, 0) == 0) {
    FiniteHopfStarAlgebra dual = dual_concrete(preset(name.substr(dual_prefix.size())));
    return {FiniteHopfStarAlgebra(name, dual.basis_labels(), dual.mult(), dual.comult(), dual.unit(),
                                  dual.counit(), dual.antipode(), dual.star()),
            PresetKind::Dual, std::nullopt};
  }
  if (name == "trivial") {
    const CayleyTable g = cyclic_group(1);
    return {group_algebra(g, name), PresetKind::Trivial, g};
  }
  const bool group_kind = name.rfind("k", 0) == 0;
  const bool function_kind = name.rfind("f", 0) == 0;
  if ((group_kind || function_kind) && name.size() == 3) {
    const std::string group_name = name.substr(1);
    if (group_name == "s3" || (group_name[0] == 'z' && group_name[1] >= '2' && group_name[1] <= '6')) {
      const CayleyTable g = group_preset(group_name);
      if (group_kind) return {group_algebra(g, name), PresetKind::GroupAlgebra, g};
      return {function_algebra(g, name), PresetKind::FunctionAlgebra, g};
    }
  }
  throw Error(ErrorCode::UnknownPreset, "unknown algebra preset '" + name + "'");
}

FiniteHopfStarAlgebra preset(const std::string& name) { return describe_preset(name).algebra; }

std::vector<std::string> preset_names() {
  std::vector<std::string> names{"trivial"};
  for (char c = '2'; c <= '6'; ++c) names.push_back(std::string("kz") + c);
  for (char c = '2'; c <= '6'; ++c) names.push_back(std::string("fz") + c);
  names.insert(names.end(), {"ks3", "fs3", "dual:fs3"});
  return names;
}

Matrix permutation_operator(const std::vector<Index>& perm) {
  const Index n = static_cast<Index>(perm.size());
  Matrix t = Matrix::Zero(n, n);
  for (Index g = 0; g < n; ++g) {
    if (perm[g] < 0 || perm[g] >= n || t.row(perm[g]).squaredNorm() != 0.0) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation");
    }
    t(perm[g], g) = 1.0;
  }
  return t;
}

}  // namespace fqg
