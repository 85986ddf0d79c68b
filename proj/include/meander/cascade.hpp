#pragma once

#include <vector>

#include "meander/composition.hpp"
#include "meander/root_subset.hpp"
#include "meander/seaweed.hpp"

namespace meander {

// Roots in epsilon-coordinates: length-n integer vectors, e.g. e_1 - e_3 is
// {1, 0, -1}. Covers the ambient systems used here: A_{n-1} inside gl_n
// (roots e_i - e_j) and D_n (roots +-e_i +- e_j).
using RootVec = std::vector<int>;

// Positive roots of the standard Levi subsystem generated by {alpha_i : i in
// S}. Type A: rank n-1 subsets; type D: rank n subsets, including
// non-admissible ones (alpha_n = e_{n-1} + e_n contributes the twisted gl
// blocks).
std::vector<RootVec> levi_positive_roots(int n, AlgebraType type, const RootSubset& S);

struct CascadeData {
  std::vector<RootVec> roots;  // strongly orthogonal, deterministic order
  int span_dim = 0;            // rank of the span E_S
};

// Kostant cascade of the Levi subsystem: per irreducible component (ordered
// by smallest coordinate), take the highest root theta (the unique positive
// root gamma-additively maximal), then recurse on the roots orthogonal to
// theta.
CascadeData cascade_of_subset(int n, AlgebraType type, const RootSubset& S);

// Closed form for the cascade size of the Levi attached to a composition a
// inside so_2n with d = n - |a|: sum(floor(a_i/2)) + d, minus one when d is
// odd.
int cascade_count_levi(const Composition& a, int d);

// Exact rank of an integer matrix (fraction-free elimination).
int rank_int_matrix(std::vector<std::vector<long long>> rows);

// Index of q(S,T) by the rank formula:
//   ind = n + dim E_S + dim E_T - 2 dim(E_S + E_T),
// with E_X spanned by the cascade of the Levi of X. Exact integer
// arithmetic; works for arbitrary subsets, admissible or not.
int tyj_index(int n, AlgebraType type, const RootSubset& S, const RootSubset& T);

// dim(E_S + E_Pi) for type D (used by the odd-n parabolic dichotomy).
int dim_sum_with_full_cascade(int n, const RootSubset& S);

}  // namespace meander
