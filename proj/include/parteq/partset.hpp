#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace parteq {

// Sorted set of distinct positive parts.
class PartSet {
 public:
  PartSet() = default;
  PartSet(std::initializer_list<std::uint64_t> parts);
  explicit PartSet(std::vector<std::uint64_t> parts);

  // Accepts "1,2,3" or "{1, 2, 3}".
  static PartSet parse(std::string_view text);

  const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::uint64_t max_part() const noexcept { return parts_.back(); }
  std::uint64_t lcm() const noexcept { return lcm_; }
  std::uint64_t gcd() const noexcept { return gcd_; }
  bool contains(std::uint64_t a) const;

  std::string to_string() const;  // "{1,2,3}"

  friend bool operator==(const PartSet&, const PartSet&) = default;
  friend auto operator<=>(const PartSet& a, const PartSet& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<std::uint64_t> parts_;
  std::uint64_t lcm_ = 1;
  std::uint64_t gcd_ = 0;
};

}  // namespace parteq
