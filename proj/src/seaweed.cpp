#include "meander/seaweed.hpp"

#include <stdexcept>

namespace meander {

char algebra_type_char(AlgebraType t) {
  switch (t) {
    case AlgebraType::A: return 'A';
    case AlgebraType::B: return 'B';
    case AlgebraType::C: return 'C';
    case AlgebraType::D: return 'D';
  }
  throw std::logic_error("bad algebra type");
}

AlgebraType algebra_type_from_char(char c) {
  switch (c) {
    case 'A': return AlgebraType::A;
    case 'B': return AlgebraType::B;
    case 'C': return AlgebraType::C;
    case 'D': return AlgebraType::D;
  }
  throw std::invalid_argument(std::string("bad algebra type '") + c + "'");
}

namespace {

void check_n(int n) {
  if (n < 0) throw std::invalid_argument("rank parameter n must be >= 0");
}

}  // namespace

SeaweedSpec SeaweedSpec::make_A(int n, Composition a, Composition b) {
  check_n(n);
  if (a.sum() != n || b.sum() != n)
    throw std::invalid_argument("type A needs |a| = |b| = n, got |a|=" + std::to_string(a.sum()) +
                                ", |b|=" + std::to_string(b.sum()) + ", n=" + std::to_string(n));
  return SeaweedSpec{AlgebraType::A, n, std::move(a), std::move(b), false};
}

SeaweedSpec SeaweedSpec::make_B(int n, Composition a, Composition b) {
  check_n(n);
  if (a.sum() > n || b.sum() > n)
    throw std::invalid_argument("type B needs |a|, |b| <= n");
  return SeaweedSpec{AlgebraType::B, n, std::move(a), std::move(b), false};
}

SeaweedSpec SeaweedSpec::make_C(int n, Composition a, Composition b) {
  check_n(n);
  if (a.sum() > n || b.sum() > n)
    throw std::invalid_argument("type C needs |a|, |b| <= n");
  return SeaweedSpec{AlgebraType::C, n, std::move(a), std::move(b), false};
}

SeaweedSpec SeaweedSpec::make_D(int n, Composition a, Composition b, bool crossing) {
  check_n(n);
  if (a.sum() > n || b.sum() > n)
    throw std::invalid_argument("type D needs |a|, |b| <= n");
  if (crossing) {
    if (a.sum() != n || b.sum() != n)
      throw std::invalid_argument("crossing spec needs |a| = |b| = n");
    if (a.empty() || b.empty() || a.last() < 2 || b.last() < 2)
      throw std::invalid_argument("crossing spec needs last parts of a and b >= 2");
    return SeaweedSpec{AlgebraType::D, n, std::move(a), std::move(b), true};
  }
  return SeaweedSpec{AlgebraType::D, n, normalize_excluded(a, n), normalize_excluded(b, n), false};
}

SeaweedSpec SeaweedSpec::swapped() const { return SeaweedSpec{type, n, b, a, crossing}; }

std::string SeaweedSpec::to_string() const {
  if (type == AlgebraType::A) return "G(" + a.to_string() + "|" + b.to_string() + ")";
  std::string out = "q_" + std::to_string(n) + "(" + a.to_string() + "|" + b.to_string() + ")";
  if (crossing) out += "_c";
  return out;
}

Composition subset_to_composition_A(int n, const RootSubset& S) {
  if (S.rank() != n - 1)
    throw std::invalid_argument("gl_" + std::to_string(n) + " subset must have rank n-1");
  std::vector<int> parts;
  int prev = 0;
  for (int i : S.complement()) {
    parts.push_back(i - prev);
    prev = i;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

Composition subset_to_composition_BC(int n, const RootSubset& S) {
  if (S.rank() != n) throw std::invalid_argument("type B/C subset must have rank n");
  std::vector<int> parts;
  int prev = 0;
  for (int i : S.complement()) {
    parts.push_back(i - prev);
    prev = i;
  }
  return Composition(std::move(parts));
}

bool is_admissible_D(int n, const RootSubset& S) {
  if (S.rank() != n) throw std::invalid_argument("type D subset must have rank n");
  if (n < 2) return true;
  return !(!S.contains(n - 1) && S.contains(n));
}

std::optional<Composition> subset_to_composition_D(int n, const RootSubset& S) {
  if (!is_admissible_D(n, S)) return std::nullopt;
  std::vector<int> parts;
  if (!S.contains(n)) {
    // Removed roots are {alpha_{j_1} < ... < alpha_{j_s}} u {alpha_n} with
    // j_s <= n-1; the composition (j_1, j_2-j_1, ..., n-j_s) has sum n.
    int prev = 0;
    for (int i : S.complement()) {
      if (i == n) continue;
      parts.push_back(i - prev);
      prev = i;
    }
    parts.push_back(n - prev);
  } else {
    // Both alpha_{n-1} and alpha_n present: removed indices stay <= n-2 and
    // the composition (i_1, i_2-i_1, ..., i_s-i_{s-1}) has sum i_s <= n-2.
    int prev = 0;
    for (int i : S.complement()) {
      parts.push_back(i - prev);
      prev = i;
    }
  }
  return Composition(std::move(parts));
}

RootSubset composition_to_subset_D(int n, const Composition& a) {
  int m = a.sum();
  if (m > n || m == n - 1)
    throw std::invalid_argument("type D composition sum must be <= n-2 or exactly n");
  RootSubset S = RootSubset::full(n);
  int at = 0;
  for (int i = 0; i < a.size(); ++i) {
    at += a[i];
    if (m == n && i == a.size() - 1) {
      S = S.without(n);  // last partial sum n stands for alpha_n
    } else {
      S = S.without(at);
    }
  }
  return S;
}

bool crossing_condition(int n, const RootSubset& S, const RootSubset& T) {
  if (S.rank() != n || T.rank() != n) throw std::invalid_argument("type D subsets must have rank n");
  if (n < 2) return false;
  bool s1 = S.contains(n - 1), sn = S.contains(n);
  bool t1 = T.contains(n - 1), tn = T.contains(n);
  return (t1 && !s1 && sn && !tn) || (s1 && !t1 && tn && !sn);
}

namespace {

RootSubset swap_last_two(int n, const RootSubset& S) {
  bool p = S.contains(n - 1), q = S.contains(n);
  RootSubset out = S;
  out = p ? out.with(n) : out.without(n);
  out = q ? out.with(n - 1) : out.without(n - 1);
  return out;
}

}  // namespace

SeaweedSpec canonicalize_seaweed_D(int n, const RootSubset& S, const RootSubset& T) {
  if (n < 1) throw std::invalid_argument("type D needs n >= 1");
  if (S.rank() != n || T.rank() != n) throw std::invalid_argument("type D subsets must have rank n");
  RootSubset s = S, t = T;
  bool crossing = crossing_condition(n, S, T);
  if (crossing) {
    // Exactly one of the two subsets is non-admissible; replacing alpha_n by
    // alpha_{n-1} in it realizes the same subalgebra up to the central
    // involution and leaves both compositions with sum n and last part >= 2.
    if (!is_admissible_D(n, s)) {
      s = s.without(n).with(n - 1);
    } else {
      t = t.without(n).with(n - 1);
    }
  } else if (!is_admissible_D(n, s) || !is_admissible_D(n, t)) {
    // Without a crossing the diagram involution alpha_{n-1} <-> alpha_n fixes
    // the pair up to isomorphism and makes both subsets admissible.
    s = swap_last_two(n, s);
    t = swap_last_two(n, t);
  }
  auto a = subset_to_composition_D(n, s);
  auto b = subset_to_composition_D(n, t);
  if (!a || !b) throw std::logic_error("canonicalization failed to reach admissible subsets");
  return SeaweedSpec::make_D(n, *a, *b, crossing);
}

Composition symmetrize(const Composition& a, int n, Symmetrization kind) {
  int d = n - a.sum();
  if (d < 0) throw std::invalid_argument("composition sum exceeds n");
  std::vector<int> parts = a.parts();
  int middle = (kind == Symmetrization::DoubledMiddle) ? 2 * d : 2 * d + 1;
  if (middle > 0) parts.push_back(middle);
  const auto& orig = a.parts();
  parts.insert(parts.end(), orig.rbegin(), orig.rend());
  return Composition(std::move(parts));
}

Composition normalize_excluded(const Composition& a, int n) {
  if (a.sum() != n - 1) return a;
  std::vector<int> parts = a.parts();
  parts.push_back(1);
  return Composition(std::move(parts));
}

}  // namespace meander
