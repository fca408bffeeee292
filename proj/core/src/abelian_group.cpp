#include "tcat/abelian_group.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tcat/error.hpp"

namespace tcat {

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](const ExactPhase& p) { return p.is_one(); });
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  if (n == 0) fail(ErrorKind::InvalidArgument, "group must be non-empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::InvalidArgument, "group table is not square");
    for (int x : row) {
      if (x < 0 || x >= n) fail(ErrorKind::InvalidArgument, "group table entry out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) fail(ErrorKind::InvalidArgument, "element 0 is not the identity");
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] != table_[b][a]) fail(ErrorKind::InvalidArgument, "group is not abelian");
      for (int c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          fail(ErrorKind::InvalidArgument, "group multiplication is not associative");
        }
      }
    }
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == 0) inverse_[a] = b;
    }
    if (inverse_[a] < 0) fail(ErrorKind::InvalidArgument, "group element without inverse");
  }

  // Backtracking search for a basis: add elements of maximal order whose
  // cyclic subgroup meets the span so far trivially until the span is everything.
  std::vector<int> by_order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [this](int a, int b) { return element_order(a) > element_order(b); });

  std::function<bool(std::vector<int>&, std::vector<int>&)> search =
      [&](std::vector<int>& chosen, std::vector<int>& span) -> bool {
    if (static_cast<int>(span.size()) == n) return true;
    std::vector<bool> in_span(static_cast<std::size_t>(n), false);
    for (int x : span) in_span[x] = true;
    for (int g : by_order) {
      if (g == 0 || in_span[g]) continue;
      const int og = element_order(g);
      bool trivial_meet = true;
      for (int p = 1, x = g; p < og; ++p, x = mul(x, g)) {
        if (in_span[x]) {
          trivial_meet = false;
          break;
        }
      }
      if (!trivial_meet) continue;
      std::vector<int> next_span;
      next_span.reserve(span.size() * static_cast<std::size_t>(og));
      for (int p = 0, x = 0; p < og; ++p, x = mul(x, g)) {
        for (int s : span) next_span.push_back(mul(s, x));
      }
      chosen.push_back(g);
      if (search(chosen, next_span)) {
        span = std::move(next_span);
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  std::vector<int> span{0};
  if (!search(basis_, span)) fail(ErrorKind::Numerical, "failed to find a basis of a finite abelian group");
  for (int g : basis_) basis_orders_.push_back(element_order(g));

  coords_.assign(static_cast<std::size_t>(n), {});
  std::vector<int> x(basis_.size(), 0);
  for (int count = 0; count < n; ++count) {
    int element = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (int p = 0; p < x[i]; ++p) element = mul(element, basis_[i]);
    }
    coords_[element] = x;
    for (std::size_t i = basis_.size(); i-- > 0;) {
      if (++x[i] < basis_orders_[i]) break;
      x[i] = 0;
    }
  }
}

int FiniteAbelianGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int FiniteAbelianGroup::from_coordinates(const std::vector<int>& x) const {
  if (x.size() != basis_.size()) fail(ErrorKind::InvalidArgument, "coordinate vector has wrong length");
  int element = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const int e = ((x[i] % basis_orders_[i]) + basis_orders_[i]) % basis_orders_[i];
    for (int p = 0; p < e; ++p) element = mul(element, basis_[i]);
  }
  return element;
}

Character FiniteAbelianGroup::character(const std::vector<int>& exponents) const {
  if (exponents.size() != basis_.size()) fail(ErrorKind::InvalidArgument, "character exponent vector has wrong length");
  Character chi;
  chi.exponents = exponents;
  chi.values.reserve(static_cast<std::size_t>(order()));
  for (int element = 0; element < order(); ++element) {
    ExactPhase value;
    const auto& x = coords_[element];
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      value = value * ExactPhase(static_cast<long>(exponents[i]) * x[i], basis_orders_[i]);
    }
    chi.values.push_back(value);
  }
  return chi;
}

std::vector<Character> FiniteAbelianGroup::characters() const {
  std::vector<Character> out;
  std::vector<int> a(basis_.size(), 0);
  for (int count = 0; count < order(); ++count) {
    out.push_back(character(a));
    for (std::size_t i = basis_.size(); i-- > 0;) {
      if (++a[i] < basis_orders_[i]) break;
      a[i] = 0;
    }
  }
  return out;
}

std::vector<int> FiniteAbelianGroup::generated(const std::vector<int>& gens) const {
  std::vector<bool> seen(static_cast<std::size_t>(order()), false);
  std::vector<int> frontier{0};
  seen[0] = true;
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    for (int g : gens) {
      const int y = mul(x, g);
      if (!seen[y]) {
        seen[y] = true;
        frontier.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < order(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> FiniteAbelianGroup::subgroups() const {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier{{0}};
  found.insert({0});
  while (!frontier.empty()) {
    const std::vector<int> h = frontier.back();
    frontier.pop_back();
    for (int g = 0; g < order(); ++g) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      std::vector<int> gens = h;
      gens.push_back(g);
      std::vector<int> next = generated(gens);
      if (found.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace tcat
