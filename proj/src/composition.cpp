#include "meander/composition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace meander {

namespace {

std::vector<int> sanitize(std::vector<int> parts) {
  std::vector<int> out;
  out.reserve(parts.size());
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("composition part must be >= 0, got " + std::to_string(p));
    if (p > 0) out.push_back(p);
  }
  return out;
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : parts_(sanitize(std::vector<int>(parts))) {}

Composition::Composition(std::vector<int> parts) : parts_(sanitize(std::move(parts))) {}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    size_t lo = token.find_first_not_of(" \t");
    if (lo == std::string::npos) {
      if (parts.empty() && in.eof()) break;  // empty or blank input
      throw std::invalid_argument("empty part in composition \"" + std::string(text) + "\"");
    }
    size_t hi = token.find_last_not_of(" \t");
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token.substr(lo, hi - lo + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad composition part \"" + token + "\"");
    }
    if (used != hi - lo + 1) throw std::invalid_argument("bad composition part \"" + token + "\"");
    parts.push_back(value);
  }
  return Composition(std::move(parts));
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::tail() const {
  if (parts_.empty()) throw std::invalid_argument("tail of empty composition");
  return Composition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Composition Composition::with_head(int head) const {
  std::vector<int> out;
  out.reserve(parts_.size() + 1);
  out.push_back(head);
  out.insert(out.end(), parts_.begin(), parts_.end());
  return Composition(std::move(out));
}

std::string Composition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

}  // namespace meander
