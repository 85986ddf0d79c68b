#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace meander {

// A subset of the simple roots {alpha_1, ..., alpha_rank}, stored as a
// bitmask (bit i-1 <=> alpha_i is a member). rank is the number of simple
// roots of the ambient algebra, so rank = n for so_2n and rank = n-1 for gl_n.
class RootSubset {
 public:
  RootSubset() = default;
  RootSubset(int rank, std::uint64_t mask);

  static RootSubset empty(int rank) { return RootSubset(rank, 0); }
  static RootSubset full(int rank);
  // Parses a comma-separated index list such as "1,3,4"; "" is the empty set.
  static RootSubset parse(int rank, std::string_view text);

  int rank() const { return rank_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const;
  int count() const;
  bool is_full() const { return *this == full(rank_); }

  RootSubset with(int i) const;
  RootSubset without(int i) const;
  // Indices of members / non-members in increasing order.
  std::vector<int> members() const;
  std::vector<int> complement() const;

  // "{alpha_1, alpha_3}" style, "{}" when empty.
  std::string to_string() const;

  bool operator==(const RootSubset&) const = default;

 private:
  int rank_ = 0;
  std::uint64_t mask_ = 0;
};

}  // namespace meander
