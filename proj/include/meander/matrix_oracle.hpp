#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "meander/cascade.hpp"
#include "meander/root_subset.hpp"

namespace meander {

// so_2n realized as 2n x 2n matrices skew-symmetric about the antidiagonal.
// Basis elements carry at most two nonzero entries:
//   h_i             = E_{i,i} - E_{2n+1-i,2n+1-i}
//   g_{e_i - e_j}   = E_{i,j} - E_{2n+1-j,2n+1-i}
//   g_{e_i + e_j}   = E_{i,2n+1-j} - E_{j,2n+1-i}          (i < j)
//   g_{-e_i - e_j}  = E_{2n+1-j,i} - E_{2n+1-i,j}          (i < j)
struct BasisElement {
  std::string label;
  // (row, col, value); 1-based positions, values in {-1, +1}.
  std::vector<std::array<int, 3>> entries;
};

// The seaweed q(S,T) spanned by the Cartan h_1..h_n, the positive root
// spaces of Delta(T) and the negative root spaces of Delta(S).
struct SeaweedRealization {
  int n = 0;
  std::vector<BasisElement> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

SeaweedRealization realize_seaweed(int n, const RootSubset& S, const RootSubset& T);

struct OracleReport {
  int dim = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<int> trial_ranks;
  int index = 0;  // dim - max rank over trials
};

// Index of q(S,T) as the corank of the form B_xi(x, y) = xi([x, y]) for a
// random functional xi over a prime field, maximized over trials. The
// commutators are computed on matrices and re-expanded in the basis (which
// doubles as a closure check of the realization).
OracleReport oracle_index_report(int n, const RootSubset& S, const RootSubset& T,
                                 int trials = 5, std::uint64_t seed = 1);
int oracle_index(int n, const RootSubset& S, const RootSubset& T, int trials = 5,
                 std::uint64_t seed = 1);

}  // namespace meander
