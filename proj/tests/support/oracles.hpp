#pragma once

// Independent reference computations. None of these call into the library's
// fusion, premodular or closure code.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace tcat::oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

/// The six permutations of {0, 1, 2}.
inline std::vector<std::array<int, 3>> s3_permutations() {
  std::array<int, 3> p{0, 1, 2};
  std::vector<std::array<int, 3>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int permutation_sign(const std::array<int, 3>& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 ? -1 : 1;
}

/// Standard 2-dim irrep: the permutation action restricted to the sum-zero plane.
inline Mat s3_standard(const std::array<int, 3>& p) {
  Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(3, 3);
  for (int i = 0; i < 3; ++i) perm(p[i], i) = 1.0;
  Eigen::MatrixXd basis(3, 2);
  basis << 1 / std::sqrt(2.0), 1 / std::sqrt(6.0), -1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 0, -2 / std::sqrt(6.0);
  return (basis.transpose() * perm * basis).cast<cd>();
}

struct S3Decomposition {
  int trivial = 0;
  int sign = 0;
  int standard = 0;
};

/// Decomposes standard (x) standard by ranks of twisted averaging projectors.
inline S3Decomposition s3_standard_squared() {
  const auto perms = s3_permutations();
  Mat avg_trivial = Mat::Zero(4, 4), avg_sign = Mat::Zero(4, 4);
  for (const auto& p : perms) {
    const Mat m = s3_standard(p);
    Mat k(4, 4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) k.block(2 * i, 2 * j, 2, 2) = m(i, j) * m;
    }
    avg_trivial += k / 6.0;
    avg_sign += static_cast<double>(permutation_sign(p)) * k / 6.0;
  }
  auto rank = [](const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m);
    int r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) r += svd.singularValues()(i) > 1e-9;
    return r;
  };
  S3Decomposition d;
  d.trivial = rank(avg_trivial);
  d.sign = rank(avg_sign);
  d.standard = (4 - d.trivial - d.sign) / 2;
  return d;
}

/// Twists of the quotient H^perp / H of a metric group (Z_n, q) with isotropic H,
/// returned as sorted exponents of exp(2 pi i x / den).
inline std::vector<long> metric_quotient_twists(int n, const std::vector<long>& q_num, long den, const std::vector<int>& h) {
  auto b = [&](int x, int y) { return ((q_num[(x + y) % n] - q_num[x] - q_num[y]) % den + den) % den; };
  std::vector<int> perp;
  for (int x = 0; x < n; ++x) {
    if (std::all_of(h.begin(), h.end(), [&](int y) { return b(x, y) == 0; })) perp.push_back(x);
  }
  std::vector<bool> used(n, false);
  std::vector<long> out;
  for (int x : perp) {
    if (used[x]) continue;
    for (int y : h) used[(x + y) % n] = true;
    out.push_back(q_num[x]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Gauss sum sum_a d_a^2 theta_a.
inline cd gauss_sum(const std::vector<double>& dims, const std::vector<cd>& twists) {
  cd s = 0;
  for (std::size_t a = 0; a < dims.size(); ++a) s += dims[a] * dims[a] * twists[a];
  return s;
}

/// Ising S-matrix in the label order (1, f, sigma).
inline Mat ising_s_matrix() {
  const double r = std::sqrt(2.0);
  Mat s(3, 3);
  s << 1, 1, r, 1, 1, -r, r, -r, 0;
  return s / 2.0;
}

/// Character-theoretic restriction of the irreps of S_3 to A_3: each irrep maps to the list
/// of A_3-characters (as exponents of omega) it contains.
inline std::vector<std::vector<int>> s3_to_a3_branching() {
  // Class sums on A_3 = {e, (123), (132)}: trivial -> 1, sign -> 1, standard -> omega + omega^2.
  return {{0}, {0}, {1, 2}};
}

}  // namespace tcat::oracle
