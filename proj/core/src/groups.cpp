#include "tcat/groups.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "tcat/abelian_group.hpp"
#include "tcat/error.hpp"

namespace tcat {

namespace {

constexpr double kMatchTol = 1e-9;

Matrix mat2(Scalar a, Scalar b, Scalar c, Scalar d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix scalar1(Scalar z) { return Matrix::Constant(1, 1, z); }

int find_matrix(const std::vector<Matrix>& list, const Matrix& m) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (max_abs(list[i] - m) < kMatchTol) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const int n = order();
  if (n == 0) fail(ErrorKind::InvalidArgument, "empty group table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n) fail(ErrorKind::InvalidArgument, "group table is not square");
    if (table_[0][a] != a || table_[a][0] != a) fail(ErrorKind::InvalidArgument, "element 0 is not the identity");
    std::vector<int> row = table_[a];
    std::sort(row.begin(), row.end());
    for (int i = 0; i < n; ++i) {
      if (row[i] != i) fail(ErrorKind::InvalidArgument, "group table row is not a permutation");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) fail(ErrorKind::InvalidArgument, "group table is not associative");
      }
    }
  }
  inverse_.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == 0) inverse_[a] = b;
    }
  }
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elements) const {
  auto has = [&](int x) { return std::find(elements.begin(), elements.end(), x) != elements.end(); };
  if (!has(0)) return false;
  for (int a : elements) {
    for (int b : elements) {
      if (!has(mul(a, inverse(b)))) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& elements) const {
  if (!is_subgroup(elements)) return false;
  auto has = [&](int x) { return std::find(elements.begin(), elements.end(), x) != elements.end(); };
  for (int g = 0; g < order(); ++g) {
    for (int n : elements) {
      if (!has(mul(mul(g, n), inverse(g)))) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::derived_subgroup() const {
  std::vector<int> out{0};
  auto has = [&](int x) { return std::find(out.begin(), out.end(), x) != out.end(); };
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) {
      const int c = mul(mul(a, b), mul(inverse(a), inverse(b)));
      if (!has(c)) out.push_back(c);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      const int c = mul(out[i], out[j]);
      if (!has(c)) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupIrreps group_from_generators(const std::string& name, const std::vector<Matrix>& faithful,
                                  const std::vector<std::pair<std::string, std::vector<Matrix>>>& irreps) {
  const auto dim = faithful.front().rows();
  std::vector<Matrix> elements{Matrix::Identity(dim, dim)};
  std::vector<std::vector<Matrix>> images(irreps.size());
  for (std::size_t r = 0; r < irreps.size(); ++r) {
    const auto d = irreps[r].second.front().rows();
    images[r].push_back(Matrix::Identity(d, d));
  }
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int e = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < faithful.size(); ++i) {
      const Matrix m = faithful[i] * elements[static_cast<std::size_t>(e)];
      if (find_matrix(elements, m) >= 0) continue;
      elements.push_back(m);
      for (std::size_t r = 0; r < irreps.size(); ++r) {
        images[r].push_back(irreps[r].second[i] * images[r][static_cast<std::size_t>(e)]);
      }
      queue.push_back(static_cast<int>(elements.size()) - 1);
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a][b] = find_matrix(elements, elements[a] * elements[b]);
      if (table[a][b] < 0) fail(ErrorKind::InvalidArgument, "generators of " + name + " do not close");
    }
  }
  GroupIrreps out{FiniteGroup(name, table), {}};

  int sum_sq = 0;
  for (std::size_t r = 0; r < irreps.size(); ++r) {
    MatrixIrrep irrep{irreps[r].first, images[r]};
    for (int a = 0; a < n; ++a) {
      const Matrix& ma = irrep.images[a];
      if (max_abs(ma * ma.adjoint() - Matrix::Identity(ma.rows(), ma.rows())) > kMatchTol) {
        fail(ErrorKind::InvalidArgument, "irrep " + irrep.name + " of " + name + " is not unitary");
      }
      for (int b = 0; b < n; ++b) {
        if (max_abs(irrep.images[table[a][b]] - ma * irrep.images[b]) > kMatchTol) {
          fail(ErrorKind::InvalidArgument, "irrep " + irrep.name + " of " + name + " is not a homomorphism");
        }
      }
    }
    double norm = 0;
    for (int a = 0; a < n; ++a) norm += std::norm(irrep.character(a));
    if (std::abs(norm / n - 1.0) > kMatchTol) fail(ErrorKind::InvalidArgument, "irrep " + irrep.name + " is reducible");
    for (const MatrixIrrep& other : out.irreps) {
      Scalar overlap = 0;
      for (int a = 0; a < n; ++a) overlap += irrep.character(a) * std::conj(other.character(a));
      if (std::abs(overlap) > kMatchTol) fail(ErrorKind::InvalidArgument, "irreps " + irrep.name + " and " + other.name + " coincide");
    }
    sum_sq += irrep.degree() * irrep.degree();
    out.irreps.push_back(std::move(irrep));
  }
  if (sum_sq != n) fail(ErrorKind::InvalidArgument, "irrep list of " + name + " is incomplete");
  return out;
}

GroupIrreps symmetric_group_s3() {
  const double c = std::cos(2 * std::numbers::pi / 3), s = std::sin(2 * std::numbers::pi / 3);
  const Matrix r = mat2(c, -s, s, c);
  const Matrix f = mat2(1, 0, 0, -1);
  return group_from_generators("S3", {r, f},
                               {{"1", {scalar1(1), scalar1(1)}}, {"z", {scalar1(1), scalar1(-1)}}, {"pi", {r, f}}});
}

GroupIrreps dihedral_group_d4() {
  const Matrix r = mat2(0, -1, 1, 0);
  const Matrix f = mat2(1, 0, 0, -1);
  return group_from_generators("D4", {r, f},
                               {{"1", {scalar1(1), scalar1(1)}},
                                {"a", {scalar1(1), scalar1(-1)}},
                                {"b", {scalar1(-1), scalar1(1)}},
                                {"c", {scalar1(-1), scalar1(-1)}},
                                {"pi", {r, f}}});
}

GroupIrreps quaternion_group_q8() {
  const Scalar I(0, 1);
  const Matrix qi = mat2(I, 0, 0, -I);
  const Matrix qj = mat2(0, 1, -1, 0);
  return group_from_generators("Q8", {qi, qj},
                               {{"1", {scalar1(1), scalar1(1)}},
                                {"a", {scalar1(1), scalar1(-1)}},
                                {"b", {scalar1(-1), scalar1(1)}},
                                {"c", {scalar1(-1), scalar1(-1)}},
                                {"pi", {qi, qj}}});
}

GroupIrreps cyclic_group(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  const Matrix gen = scalar1(ExactPhase(1, n).value());
  std::vector<std::pair<std::string, std::vector<Matrix>>> irreps;
  for (int j = 0; j < n; ++j) irreps.push_back({std::to_string(j), {scalar1(ExactPhase(j, n).value())}});
  return group_from_generators("Z" + std::to_string(n), {gen}, irreps);
}

std::vector<std::vector<Scalar>> abelian_subgroup_characters(const FiniteGroup& g, const std::vector<int>& elements) {
  if (elements.empty() || elements.front() != 0 || !g.is_subgroup(elements)) {
    fail(ErrorKind::InvalidArgument, "element list is not a subgroup starting at the identity");
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int p = g.mul(elements[i], elements[j]);
      table[i][j] = static_cast<int>(std::find(elements.begin(), elements.end(), p) - elements.begin());
    }
  }
  const FiniteAbelianGroup a(table);
  std::vector<std::vector<Scalar>> out;
  for (const Character& chi : a.characters()) {
    std::vector<Scalar> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(chi(static_cast<int>(i)).value());
    out.push_back(std::move(values));
  }
  return out;
}

}  // namespace tcat
