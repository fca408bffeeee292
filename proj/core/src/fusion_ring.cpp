#include "tcat/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tcat/error.hpp"

namespace tcat {

FusionRing::FusionRing(std::vector<std::string> names, std::vector<Label> dual,
                       const std::vector<FusionTriple>& triples)
    : names_(std::move(names)), dual_(std::move(dual)) {
  const int n = rank();
  if (n == 0) fail(ErrorKind::InvalidArgument, "fusion ring needs at least the unit label");
  if (static_cast<int>(dual_.size()) != n) fail(ErrorKind::InvalidArgument, "dual map has wrong length");
  for (Label d : dual_) {
    if (d < 0 || d >= n) fail(ErrorKind::InvalidArgument, "dual map entry out of range");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) fail(ErrorKind::InvalidArgument, "duplicate label name '" + names_[i] + "'");
    }
  }
  channels_.assign(static_cast<std::size_t>(n * n), {});
  for (const FusionTriple& t : triples) {
    if (t.a < 0 || t.a >= n || t.b < 0 || t.b >= n || t.c < 0 || t.c >= n) {
      fail(ErrorKind::InvalidArgument, "fusion triple label out of range");
    }
    if (t.multiplicity < 0) fail(ErrorKind::InvalidArgument, "negative fusion multiplicity");
    if (t.multiplicity == 0) continue;
    auto& list = channels_[static_cast<std::size_t>(t.a * n + t.b)];
    auto it = std::find_if(list.begin(), list.end(), [&](const Channel& ch) { return ch.label == t.c; });
    if (it != list.end()) fail(ErrorKind::InvalidArgument, "duplicate fusion triple");
    list.push_back({t.c, t.multiplicity});
  }
  for (auto& list : channels_) {
    std::sort(list.begin(), list.end(), [](const Channel& x, const Channel& y) { return x.label < y.label; });
  }
}

std::optional<Label> FusionRing::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Label>(it - names_.begin());
}

Label FusionRing::lookup(const std::string& name) const {
  auto a = find(name);
  if (!a) fail(ErrorKind::InvalidArgument, "unknown label '" + name + "'");
  return *a;
}

int FusionRing::N(Label a, Label b, Label c) const {
  for (const Channel& ch : channels(a, b)) {
    if (ch.label == c) return ch.multiplicity;
  }
  return 0;
}

std::span<const Channel> FusionRing::channels(Label a, Label b) const {
  return channels_.at(static_cast<std::size_t>(a * rank() + b));
}

std::vector<FusionTriple> FusionRing::triples() const {
  std::vector<FusionTriple> out;
  for (Label a = 0; a < rank(); ++a) {
    for (Label b = 0; b < rank(); ++b) {
      for (const Channel& ch : channels(a, b)) out.push_back({a, b, ch.label, ch.multiplicity});
    }
  }
  return out;
}

std::optional<Label> FusionRing::simple_product(Label a, Label b) const {
  auto list = channels(a, b);
  if (list.size() == 1 && list[0].multiplicity == 1) return list[0].label;
  return std::nullopt;
}

bool FusionRing::multiplicity_free() const {
  return std::all_of(channels_.begin(), channels_.end(), [](const auto& list) {
    return std::all_of(list.begin(), list.end(), [](const Channel& ch) { return ch.multiplicity <= 1; });
  });
}

std::string FusionRing::describe(std::span<const Label> labels) const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ", ";
    os << name(labels[i]);
  }
  os << '}';
  return os.str();
}

RingReport validate_ring(const FusionRing& ring) {
  RingReport report;
  const int n = ring.rank();
  auto issue = [&](std::string axiom, std::vector<Label> witness, std::string detail) {
    report.failures.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  };

  if (ring.dual(0) != 0) issue("dual", {0}, "dual of the unit is not the unit");
  for (Label a = 0; a < n; ++a) {
    if (ring.dual(ring.dual(a)) != a) issue("dual", {a}, "duality is not an involution at " + ring.name(a));
  }
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      const int delta = a == b ? 1 : 0;
      if (ring.N(0, a, b) != delta || ring.N(a, 0, b) != delta) {
        issue("unit", {a, b}, "unit fusion fails for (" + ring.name(a) + ", " + ring.name(b) + ")");
      }
      const int conj = b == ring.dual(a) ? 1 : 0;
      if (ring.N(a, b, 0) != conj) {
        issue("conjugate", {a, b, 0},
              "N(" + ring.name(a) + "," + ring.name(b) + ";1) = " + std::to_string(ring.N(a, b, 0)) + ", expected " +
                  std::to_string(conj));
      }
    }
  }
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (Label c = 0; c < n; ++c) {
        const int nabc = ring.N(a, b, c);
        if (nabc != ring.N(ring.dual(a), c, b) || nabc != ring.N(c, ring.dual(b), a)) {
          issue("frobenius", {a, b, c},
                "Frobenius reciprocity fails at (" + ring.name(a) + "," + ring.name(b) + "," + ring.name(c) + ")");
        }
        for (Label d = 0; d < n; ++d) {
          int lhs = 0;
          for (const Channel& e : ring.channels(a, b)) lhs += e.multiplicity * ring.N(e.label, c, d);
          int rhs = 0;
          for (const Channel& f : ring.channels(b, c)) rhs += f.multiplicity * ring.N(a, f.label, d);
          if (lhs != rhs) {
            issue("associativity", {a, b, c, d},
                  "associativity fails at (" + ring.name(a) + "," + ring.name(b) + "," + ring.name(c) + ";" +
                      ring.name(d) + "): " + std::to_string(lhs) + " != " + std::to_string(rhs));
          }
        }
      }
    }
  }
  return report;
}

std::vector<double> fp_dims(const FusionRing& ring, Tolerance tol) {
  const int n = ring.rank();
  // M_{bc} = sum_a N_{ab}^c has the dimension vector as its Perron eigenvector.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (const Channel& ch : ring.channels(a, b)) m(b, ch.label) += ch.multiplicity;
    }
  }
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  constexpr int kMaxSteps = 100000;
  bool converged = false;
  double last_change = std::numeric_limits<double>::infinity();
  for (int step = 0; step < kMaxSteps; ++step) {
    Eigen::VectorXd next = m * v;
    if (next(0) <= 0.0) break;
    next /= next(0);
    const double change = (next - v).cwiseAbs().maxCoeff();
    v = next;
    converged = converged || change <= tol.eps * 1e-3;
    // Past the tolerance, keep polishing until the iteration stops improving.
    const bool settled = change == 0.0 || change >= last_change;
    last_change = change;
    if (converged && settled) {
      std::vector<double> out(v.data(), v.data() + n);
      for (double d : out) {
        if (!(d >= 1.0 - tol.eps)) fail(ErrorKind::Numerical, "Frobenius-Perron dimension below 1: malformed ring");
      }
      return out;
    }
  }
  fail(ErrorKind::Numerical, "power iteration for Frobenius-Perron dimensions did not converge: malformed ring");
}

std::vector<Label> invertibles(const FusionRing& ring, std::span<const double> dims, Tolerance tol) {
  if (static_cast<int>(dims.size()) != ring.rank()) fail(ErrorKind::InvalidArgument, "dimension vector has wrong length");
  std::vector<Label> out;
  for (Label a = 0; a < ring.rank(); ++a) {
    int total = 0;
    for (const Channel& ch : ring.channels(a, ring.dual(a))) total += ch.multiplicity;
    const bool by_fusion = total == 1;
    const bool by_dim = dims[a] < 1.0 + tol.eps;
    if (by_fusion != by_dim) {
      fail(ErrorKind::Numerical, "invertibility of " + ring.name(a) + " disagrees between fusion and dimension");
    }
    if (by_fusion) out.push_back(a);
  }
  return out;
}

GroupTable::GroupTable(std::vector<Label> labels, FiniteAbelianGroup group)
    : labels_(std::move(labels)), group_(std::move(group)) {}

std::optional<int> GroupTable::element(Label label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Label GroupTable::mul(Label a, Label b) const {
  auto x = element(a);
  auto y = element(b);
  if (!x || !y) fail(ErrorKind::InvalidArgument, "label is not a group element");
  return label(group_.mul(*x, *y));
}

GroupTable group_structure(const FusionRing& ring, std::span<const Label> subset) {
  std::vector<Label> labels(subset.begin(), subset.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty() || labels.front() != 0) {
    fail(ErrorKind::InvalidArgument, "subset " + ring.describe(labels) + " does not contain the unit");
  }
  const auto index_of = [&](Label c) -> int {
    auto it = std::find(labels.begin(), labels.end(), c);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
  };
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto prod = ring.simple_product(labels[i], labels[j]);
      if (!prod) {
        fail(ErrorKind::InvalidArgument, ring.name(labels[i]) + " (x) " + ring.name(labels[j]) +
                                             " is not simple: " + ring.name(labels[i == 0 ? j : i]) +
                                             " not invertible");
      }
      const int k = index_of(*prod);
      if (k < 0) {
        fail(ErrorKind::InvalidArgument, "subset " + ring.describe(labels) + " not closed under fusion: " +
                                             ring.name(labels[i]) + " (x) " + ring.name(labels[j]) + " = " +
                                             ring.name(*prod));
      }
      table[i][j] = k;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (index_of(ring.dual(labels[i])) < 0) {
      fail(ErrorKind::InvalidArgument, "subset not closed under duals at " + ring.name(labels[i]));
    }
  }
  try {
    return GroupTable(std::move(labels), FiniteAbelianGroup(std::move(table)));
  } catch (const Error& e) {
    fail(ErrorKind::InvalidArgument, std::string("subset does not form an abelian group: ") + e.what());
  }
}

}  // namespace tcat
