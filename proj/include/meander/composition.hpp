#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace meander {

// A composition: a finite sequence of positive integers. Zero parts are
// dropped on construction (they arise naturally from the reduction
// arithmetic); negative parts are rejected.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  // Parses a comma-separated list such as "2,4,3". Whitespace around parts is
  // allowed; the empty string (or all-blank string) is the empty composition.
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int sum() const;

  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
  int first() const { return parts_.front(); }
  int last() const { return parts_.back(); }

  Composition reversed() const;
  // Composition with the first part removed.
  Composition tail() const;
  // New composition with `head` prepended (dropped if zero).
  Composition with_head(int head) const;

  // "2,4,3" or "" for the empty composition.
  std::string to_string() const;

  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

}  // namespace meander
