#include "meander/cascade.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace meander {

namespace {

bool interval_in(const RootSubset& S, int lo, int hi) {
  for (int k = lo; k <= hi; ++k)
    if (!S.contains(k)) return false;
  return true;
}

RootVec make_root(int n, int i, int j, int si, int sj) {
  RootVec v(static_cast<size_t>(n), 0);
  v[static_cast<size_t>(i) - 1] = si;
  v[static_cast<size_t>(j) - 1] = sj;
  return v;
}

}  // namespace

std::vector<RootVec> levi_positive_roots(int n, AlgebraType type, const RootSubset& S) {
  std::vector<RootVec> roots;
  if (type == AlgebraType::A) {
    if (S.rank() != n - 1) throw std::invalid_argument("type A subset must have rank n-1");
    // e_i - e_j lies in the span of {alpha_k : k in S} iff i..j-1 is in S.
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (interval_in(S, i, j - 1)) roots.push_back(make_root(n, i, j, 1, -1));
    return roots;
  }
  if (type != AlgebraType::D) throw std::invalid_argument("cascade supports types A and D");
  if (S.rank() != n) throw std::invalid_argument("type D subset must have rank n");
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // Simple-root supports: e_i - e_j needs i..j-1; e_i + e_n needs
      // {i..n-2, n}; e_i + e_j (j < n) needs {i..n-2, n-1, n}.
      if (interval_in(S, i, j - 1)) roots.push_back(make_root(n, i, j, 1, -1));
      if (j == n) {
        if (interval_in(S, i, n - 2) && S.contains(n)) roots.push_back(make_root(n, i, j, 1, 1));
      } else {
        if (interval_in(S, i, n - 2) && S.contains(n - 1) && S.contains(n))
          roots.push_back(make_root(n, i, j, 1, 1));
      }
    }
  }
  return roots;
}

namespace {

long long dot(const RootVec& x, const RootVec& y) {
  long long s = 0;
  for (size_t k = 0; k < x.size(); ++k) s += static_cast<long long>(x[k]) * y[k];
  return s;
}

RootVec add(const RootVec& x, const RootVec& y) {
  RootVec z(x.size());
  for (size_t k = 0; k < x.size(); ++k) z[k] = x[k] + y[k];
  return z;
}

int min_support(const RootVec& v) {
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) return static_cast<int>(k) + 1;
  return static_cast<int>(v.size()) + 1;
}

// Appends the cascade of the subsystem with positive roots P.
void cascade_rec(std::vector<RootVec> P, std::vector<RootVec>& out) {
  if (P.empty()) return;
  // Split into connectivity components under non-orthogonality.
  std::vector<int> comp(P.size(), -1);
  int ncomp = 0;
  for (size_t i = 0; i < P.size(); ++i) {
    if (comp[i] >= 0) continue;
    std::vector<size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      for (size_t w = 0; w < P.size(); ++w)
        if (comp[w] < 0 && dot(P[v], P[w]) != 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  // Process components in order of smallest epsilon-coordinate.
  std::vector<int> order(static_cast<size_t>(ncomp));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> key(static_cast<size_t>(ncomp), 1 << 20);
  for (size_t i = 0; i < P.size(); ++i)
    key[static_cast<size_t>(comp[i])] = std::min(key[static_cast<size_t>(comp[i])], min_support(P[i]));
  std::sort(order.begin(), order.end(), [&](int x, int y) { return key[static_cast<size_t>(x)] < key[static_cast<size_t>(y)]; });

  for (int c : order) {
    std::vector<RootVec> roots;
    for (size_t i = 0; i < P.size(); ++i)
      if (comp[i] == c) roots.push_back(P[i]);
    // Highest root: the unique positive root theta with theta + gamma never a
    // root (sums of positive roots are positive, so membership in `roots`
    // decides it).
    const RootVec* theta = nullptr;
    for (const RootVec& cand : roots) {
      bool maximal = true;
      for (const RootVec& g : roots) {
        if (std::find(roots.begin(), roots.end(), add(cand, g)) != roots.end()) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        if (theta) throw std::logic_error("highest root is not unique in an irreducible component");
        theta = &cand;
      }
    }
    if (!theta) throw std::logic_error("no highest root found");
    out.push_back(*theta);
    std::vector<RootVec> orthogonal;
    for (const RootVec& g : roots)
      if (g != *theta && dot(g, *theta) == 0) orthogonal.push_back(g);
    cascade_rec(std::move(orthogonal), out);
  }
}

}  // namespace

CascadeData cascade_of_subset(int n, AlgebraType type, const RootSubset& S) {
  CascadeData data;
  cascade_rec(levi_positive_roots(n, type, S), data.roots);
  std::vector<std::vector<long long>> rows;
  rows.reserve(data.roots.size());
  for (const RootVec& r : data.roots) rows.emplace_back(r.begin(), r.end());
  data.span_dim = rank_int_matrix(std::move(rows));
  return data;
}

int cascade_count_levi(const Composition& a, int d) {
  if (d < 0) throw std::invalid_argument("negative middle size");
  int k = d;
  for (int p : a.parts()) k += p / 2;
  return d % 2 == 1 ? k - 1 : k;
}

int rank_int_matrix(std::vector<std::vector<long long>> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    for (size_t r = row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      // Fraction-free elimination: r <- pivot_value * r - multiplier * pivot.
      long long pv = rows[row][col], mv = rows[r][col];
      long long g = std::gcd(pv, mv);
      long long fr = pv / g, fp = mv / g;
      for (size_t c = 0; c < cols; ++c) rows[r][c] = fr * rows[r][c] - fp * rows[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

int tyj_index(int n, AlgebraType type, const RootSubset& S, const RootSubset& T) {
  CascadeData es = cascade_of_subset(n, type, S);
  CascadeData et = cascade_of_subset(n, type, T);
  std::vector<std::vector<long long>> rows;
  rows.reserve(es.roots.size() + et.roots.size());
  for (const RootVec& r : es.roots) rows.emplace_back(r.begin(), r.end());
  for (const RootVec& r : et.roots) rows.emplace_back(r.begin(), r.end());
  int dim_sum = rank_int_matrix(std::move(rows));
  return n + es.span_dim + et.span_dim - 2 * dim_sum;
}

int dim_sum_with_full_cascade(int n, const RootSubset& S) {
  CascadeData es = cascade_of_subset(n, AlgebraType::D, S);
  CascadeData full = cascade_of_subset(n, AlgebraType::D, RootSubset::full(n));
  std::vector<std::vector<long long>> rows;
  for (const RootVec& r : es.roots) rows.emplace_back(r.begin(), r.end());
  for (const RootVec& r : full.roots) rows.emplace_back(r.begin(), r.end());
  return rank_int_matrix(std::move(rows));
}

}  // namespace meander
