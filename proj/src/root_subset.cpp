#include "meander/root_subset.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace meander {

RootSubset::RootSubset(int rank, std::uint64_t mask) : rank_(rank), mask_(mask) {
  if (rank < 0 || rank > 62) throw std::invalid_argument("rank out of range: " + std::to_string(rank));
  if (rank < 64 && (mask >> rank) != 0)
    throw std::invalid_argument("subset mask has members above rank " + std::to_string(rank));
}

RootSubset RootSubset::full(int rank) {
  if (rank < 0 || rank > 62) throw std::invalid_argument("rank out of range: " + std::to_string(rank));
  return RootSubset(rank, rank == 0 ? 0 : ((std::uint64_t{1} << rank) - 1));
}

RootSubset RootSubset::parse(int rank, std::string_view text) {
  std::uint64_t mask = 0;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    size_t lo = token.find_first_not_of(" \t");
    if (lo == std::string::npos) {
      if (mask == 0 && in.eof()) break;
      throw std::invalid_argument("empty index in subset \"" + std::string(text) + "\"");
    }
    size_t hi = token.find_last_not_of(" \t");
    size_t used = 0;
    int idx = 0;
    try {
      idx = std::stoi(token.substr(lo, hi - lo + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad subset index \"" + token + "\"");
    }
    if (used != hi - lo + 1) throw std::invalid_argument("bad subset index \"" + token + "\"");
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("subset index " + std::to_string(idx) + " outside 1.." + std::to_string(rank));
    mask |= std::uint64_t{1} << (idx - 1);
  }
  return RootSubset(rank, mask);
}

bool RootSubset::contains(int i) const {
  if (i < 1 || i > rank_) return false;
  return (mask_ >> (i - 1)) & 1;
}

int RootSubset::count() const { return std::popcount(mask_); }

RootSubset RootSubset::with(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("subset index out of range");
  return RootSubset(rank_, mask_ | (std::uint64_t{1} << (i - 1)));
}

RootSubset RootSubset::without(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("subset index out of range");
  return RootSubset(rank_, mask_ & ~(std::uint64_t{1} << (i - 1)));
}

std::vector<int> RootSubset::members() const {
  std::vector<int> out;
  for (int i = 1; i <= rank_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<int> RootSubset::complement() const {
  std::vector<int> out;
  for (int i = 1; i <= rank_; ++i)
    if (!contains(i)) out.push_back(i);
  return out;
}

std::string RootSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ", ";
    out += "alpha_" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace meander
