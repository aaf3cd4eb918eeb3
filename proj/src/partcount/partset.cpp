#include "parteq/partset.hpp"

#include "parteq/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace parteq {

PartSet::PartSet(std::initializer_list<std::uint64_t> parts)
    : PartSet(std::vector<std::uint64_t>(parts)) {}

PartSet::PartSet(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::InvalidPartSet, "empty part set");
  std::sort(parts_.begin(), parts_.end());
  if (parts_.front() == 0) throw Error(ErrorCode::InvalidPartSet, "parts must be positive");
  if (std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end()) {
    throw Error(ErrorCode::InvalidPartSet, "repeated part");
  }
  for (auto a : parts_) {
    std::uint64_t g = std::gcd(lcm_, a);
    if (lcm_ / g > std::numeric_limits<std::uint64_t>::max() / a) {
      throw Error(ErrorCode::InvalidPartSet, "lcm of parts overflows 64 bits");
    }
    lcm_ = lcm_ / g * a;
    gcd_ = std::gcd(gcd_, a);
  }
}

PartSet PartSet::parse(std::string_view text) {
  std::vector<std::uint64_t> parts;
  std::uint64_t cur = 0;
  bool in_number = false;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + static_cast<std::uint64_t>(ch - '0');
      in_number = true;
    } else if (ch == ',' || ch == ' ' || ch == '{' || ch == '}' || ch == ';') {
      if (in_number) parts.push_back(cur);
      cur = 0;
      in_number = false;
    } else {
      throw Error(ErrorCode::InvalidPartSet, "unexpected character in part set: " + std::string(text));
    }
  }
  if (in_number) parts.push_back(cur);
  return PartSet(std::move(parts));
}

bool PartSet::contains(std::uint64_t a) const {
  return std::binary_search(parts_.begin(), parts_.end(), a);
}

std::string PartSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "}";
}

}  // namespace parteq
