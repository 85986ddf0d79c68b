#pragma once

#include <optional>
#include <string>

#include "meander/composition.hpp"
#include "meander/root_subset.hpp"

namespace meander {

enum class AlgebraType { A, B, C, D };

char algebra_type_char(AlgebraType t);
AlgebraType algebra_type_from_char(char c);

// A seaweed subalgebra in composition form.
//
//   type A: q(a|b) in gl_n with |a| = |b| = n,
//   type B: q_n(a|b) in so_{2n+1} with |a|, |b| <= n,
//   type C: q_n(a|b) in sp_{2n}  with |a|, |b| <= n,
//   type D: q_n(a|b) in so_{2n}  with |a|, |b| <= n and |a|, |b| != n-1;
//           additionally q_n(a|b)_c ("crossing") with |a| = |b| = n and the
//           last parts of a and b both >= 2.
//
// For type D a raw composition with sum n-1 is normalized by appending a part
// 1 (the two subsets realizing it define the same subalgebra as the
// normalized one), so constructed specs never carry sum n-1.
struct SeaweedSpec {
  AlgebraType type = AlgebraType::A;
  int n = 0;
  Composition a;
  Composition b;
  bool crossing = false;

  // Validating constructors; throw std::invalid_argument on malformed input.
  static SeaweedSpec make_A(int n, Composition a, Composition b);
  static SeaweedSpec make_B(int n, Composition a, Composition b);
  static SeaweedSpec make_C(int n, Composition a, Composition b);
  static SeaweedSpec make_D(int n, Composition a, Composition b, bool crossing = false);

  SeaweedSpec swapped() const;  // (a,b) exchanged, same type/n/crossing

  // Paper-style notation: "q_5(2,3|1,4)_c", "G(2,4,3|5,4)" for type A.
  std::string to_string() const;

  bool operator==(const SeaweedSpec&) const = default;
};

// --- subsets -> compositions ------------------------------------------------

// gl_n, S a subset of {alpha_1..alpha_{n-1}}: complement {i_1<...<i_s} gives
// (i_1, i_2-i_1, ..., n-i_s); S full gives (n), S empty gives (1,...,1).
Composition subset_to_composition_A(int n, const RootSubset& S);

// so_{2n+1} / sp_2n, S a subset of {alpha_1..alpha_n}: complement
// {i_1<...<i_s} gives (i_1, i_2-i_1, ..., i_s-i_{s-1}), of sum i_s <= n.
Composition subset_to_composition_BC(int n, const RootSubset& S);

// so_2n. S is admissible unless alpha_{n-1} is absent and alpha_n present
// (for n = 1 every subset counts as admissible). Admissible subsets yield a
// composition with sum <= n-2 (both of alpha_{n-1}, alpha_n present) or sum
// exactly n (alpha_n absent); returns std::nullopt for non-admissible S.
bool is_admissible_D(int n, const RootSubset& S);
std::optional<Composition> subset_to_composition_D(int n, const RootSubset& S);

// Inverse map for admissible subsets: requires |a| <= n-2 or |a| = n.
RootSubset composition_to_subset_D(int n, const Composition& a);

// --- spec construction for so_2n --------------------------------------------

// Detects the crossing condition (alpha_{n-1} and alpha_n split across S\T and
// T\S), repairs non-admissible subsets per the type-D dictionary (swap
// alpha_{n-1} <-> alpha_n in both subsets when there is no crossing; replace
// alpha_n by alpha_{n-1} in the unique non-admissible one when there is), and
// returns the composition-form spec.
bool crossing_condition(int n, const RootSubset& S, const RootSubset& T);
SeaweedSpec canonicalize_seaweed_D(int n, const RootSubset& S, const RootSubset& T);

// --- composition helpers ------------------------------------------------------

enum class Symmetrization { DoubledMiddle, DoubledMiddlePlusOne };

// (a, 2d, a^{-1}) with d = n - |a| (middle part omitted when d = 0), of sum
// 2n; the PlusOne variant gives (a, 2d+1, a^{-1}) of sum 2n+1.
Composition symmetrize(const Composition& a, int n, Symmetrization kind);

// Type D excluded-sum rule: a composition with |a| = n-1 denotes the same
// subalgebra as (a, 1); all other compositions pass through unchanged.
Composition normalize_excluded(const Composition& a, int n);

}  // namespace meander
