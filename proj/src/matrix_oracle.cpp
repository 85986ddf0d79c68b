#include "meander/matrix_oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>

namespace meander {

namespace {

constexpr std::uint64_t kPrime = 2147483647;  // 2^31 - 1

std::string root_label(const RootVec& r) {
  std::string out;
  for (size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    if (!out.empty() || r[k] < 0) out += r[k] > 0 ? "+" : "-";
    out += "e" + std::to_string(k + 1);
  }
  return out;
}

BasisElement root_element(int n, const RootVec& r) {
  // Decompose r = si*e_i + sj*e_j with i < j.
  int i = 0, j = 0, si = 0, sj = 0;
  for (int k = 1; k <= n; ++k) {
    int c = r[static_cast<size_t>(k) - 1];
    if (c == 0) continue;
    if (!i) { i = k; si = c; } else { j = k; sj = c; }
  }
  int N = 2 * n;
  BasisElement e;
  e.label = root_label(r);
  if (si == 1 && sj == -1) {
    e.entries = {{i, j, 1}, {N + 1 - j, N + 1 - i, -1}};
  } else if (si == -1 && sj == 1) {
    e.entries = {{j, i, 1}, {N + 1 - i, N + 1 - j, -1}};
  } else if (si == 1 && sj == 1) {
    e.entries = {{i, N + 1 - j, 1}, {j, N + 1 - i, -1}};
  } else {
    e.entries = {{N + 1 - j, i, 1}, {N + 1 - i, j, -1}};
  }
  return e;
}

RootVec negate(const RootVec& r) {
  RootVec v = r;
  for (int& c : v) c = -c;
  return v;
}

}  // namespace

SeaweedRealization realize_seaweed(int n, const RootSubset& S, const RootSubset& T) {
  SeaweedRealization q;
  q.n = n;
  for (int i = 1; i <= n; ++i) {
    BasisElement h;
    h.label = "h" + std::to_string(i);
    h.entries = {{i, i, 1}, {2 * n + 1 - i, 2 * n + 1 - i, -1}};
    q.basis.push_back(std::move(h));
  }
  for (const RootVec& r : levi_positive_roots(n, AlgebraType::D, T))
    q.basis.push_back(root_element(n, r));
  for (const RootVec& r : levi_positive_roots(n, AlgebraType::D, S))
    q.basis.push_back(root_element(n, negate(r)));
  return q;
}

namespace {

struct FieldMatrixBuilder {
  int n;
  int dim;
  // Position (r, c) -> (basis element id, value of that element there).
  std::map<std::pair<int, int>, std::pair<int, int>> pos_to_basis;

  explicit FieldMatrixBuilder(const SeaweedRealization& q) : n(q.n), dim(q.dim()) {
    for (int m = 0; m < dim; ++m)
      for (const auto& [r, c, v] : q.basis[static_cast<size_t>(m)].entries) {
        auto [it, fresh] = pos_to_basis.try_emplace({r, c}, m, v);
        if (!fresh) throw std::logic_error("basis elements overlap in matrix support");
      }
  }

  // Expands the sparse matrix `entries` in the basis; throws when the matrix
  // leaves the span (the realization would not be closed under commutators).
  std::vector<std::pair<int, long long>> expand(const std::map<std::pair<int, int>, long long>& entries) const {
    std::map<int, long long> coeff;
    for (const auto& [pos, value] : entries) {
      if (value == 0) continue;
      auto it = pos_to_basis.find(pos);
      if (it == pos_to_basis.end())
        throw std::logic_error("commutator leaves the seaweed span: realization not closed");
      const auto& [m, unit] = it->second;
      long long c = value * unit;  // unit is +-1
      auto [cit, fresh] = coeff.try_emplace(m, c);
      if (!fresh && cit->second != c)
        throw std::logic_error("inconsistent expansion: matrix breaks antidiagonal skew-symmetry");
    }
    return {coeff.begin(), coeff.end()};
  }
};

std::map<std::pair<int, int>, long long> commutator(const BasisElement& x, const BasisElement& y) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [r1, c1, v1] : x.entries)
    for (const auto& [r2, c2, v2] : y.entries) {
      if (c1 == r2) out[{r1, c2}] += static_cast<long long>(v1) * v2;
      if (c2 == r1) out[{r2, c1}] -= static_cast<long long>(v2) * v1;
    }
  return out;
}

int rank_mod_p(std::vector<std::vector<std::uint64_t>>& m) {
  const std::uint64_t p = kPrime;
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = (unsigned __int128)r * b % p;
      b = (unsigned __int128)b * b % p;
      e >>= 1;
    }
    return r;
  };
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[row], m[piv]);
    std::uint64_t inv = powmod(m[row][col], p - 2);
    for (size_t c = col; c < cols; ++c) m[row][c] = (unsigned __int128)m[row][c] * inv % p;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      std::uint64_t f = m[r][col];
      for (size_t c = col; c < cols; ++c) {
        std::uint64_t sub = (unsigned __int128)f * m[row][c] % p;
        m[r][c] = (m[r][c] + p - sub) % p;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

OracleReport oracle_index_report(int n, const RootSubset& S, const RootSubset& T, int trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  SeaweedRealization q = realize_seaweed(n, S, T);
  FieldMatrixBuilder builder(q);
  const int d = q.dim();

  // Structure coordinates of all pairwise commutators, computed once.
  std::vector<std::vector<std::vector<std::pair<int, long long>>>> strc(
      static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    strc[static_cast<size_t>(k)].resize(static_cast<size_t>(d));
    for (int l = k + 1; l < d; ++l)
      strc[static_cast<size_t>(k)][static_cast<size_t>(l)] =
          builder.expand(commutator(q.basis[static_cast<size_t>(k)], q.basis[static_cast<size_t>(l)]));
  }

  OracleReport report;
  report.dim = d;
  report.prime = kPrime;
  report.seed = seed;
  int best_rank = 0;
  for (int t = 0; t < trials; ++t) {
    std::seed_seq sseq{seed, static_cast<std::uint64_t>(t)};
    std::mt19937_64 rng(sseq);
    auto draw = [&]() {
      // 31-bit rejection sampling keeps the draw unbiased and reproducible.
      for (;;) {
        std::uint64_t x = rng() & ((std::uint64_t{1} << 31) - 1);
        if (x < kPrime) return x;
      }
    };
    std::vector<std::uint64_t> xi(static_cast<size_t>(d));
    for (auto& v : xi) v = draw();

    std::vector<std::vector<std::uint64_t>> M(static_cast<size_t>(d),
                                              std::vector<std::uint64_t>(static_cast<size_t>(d), 0));
    for (int k = 0; k < d; ++k)
      for (int l = k + 1; l < d; ++l) {
        std::uint64_t v = 0;
        for (const auto& [m, c] : strc[static_cast<size_t>(k)][static_cast<size_t>(l)]) {
          long long cc = c % static_cast<long long>(kPrime);
          if (cc < 0) cc += static_cast<long long>(kPrime);
          v = (v + (unsigned __int128)xi[static_cast<size_t>(m)] * static_cast<std::uint64_t>(cc)) % kPrime;
        }
        M[static_cast<size_t>(k)][static_cast<size_t>(l)] = v;
        M[static_cast<size_t>(l)][static_cast<size_t>(k)] = v ? kPrime - v : 0;
      }
    int r = rank_mod_p(M);
    report.trial_ranks.push_back(r);
    best_rank = std::max(best_rank, r);
  }
  report.index = d - best_rank;
  return report;
}

int oracle_index(int n, const RootSubset& S, const RootSubset& T, int trials, std::uint64_t seed) {
  return oracle_index_report(n, S, T, trials, seed).index;
}

}  // namespace meander
