#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace charp {

using Exponent = std::uint32_t;

/// A finitely supported tuple of exponents indexed by basis position.
/// Trailing zeros are never stored, so structural equality is value equality.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<Exponent> exponents);
  MultiIndex(std::initializer_list<Exponent> exponents);

  static MultiIndex unit(std::size_t position, Exponent e = 1);

  Exponent operator[](std::size_t position) const noexcept {
    return position < exps_.size() ? exps_[position] : 0;
  }
  /// One past the last position with a nonzero entry.
  std::size_t length() const noexcept { return exps_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  bool is_zero() const noexcept { return exps_.empty(); }
  /// |β|, the sum of all entries.
  std::uint64_t order() const noexcept;
  /// Sum of entries over positions [first, last).
  std::uint64_t order_in(std::size_t first, std::size_t last) const noexcept;

  MultiIndex with(std::size_t position, Exponent e) const;

  /// Componentwise this <= other.
  bool le(const MultiIndex& other) const noexcept;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  /// Requires b.le(a).
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
  friend MultiIndex lcm(const MultiIndex& a, const MultiIndex& b);
  /// Componentwise maximum.
  friend MultiIndex join(const MultiIndex& a, const MultiIndex& b) { return lcm(a, b); }

  bool operator==(const MultiIndex&) const = default;
  /// Lexicographic on positions; used for container keys only.
  std::strong_ordering operator<=>(const MultiIndex& o) const { return exps_ <=> o.exps_; }

  std::size_t hash() const noexcept;

 private:
  void trim() noexcept;
  std::vector<Exponent> exps_;
};

/// All indices with |β| <= max_order supported on the first `positions`
/// entries and componentwise bounded by `cap` (when given). Ordered by
/// increasing |β|, earlier positions taking larger exponents first.
std::vector<MultiIndex> enumerate_indices(std::size_t positions, std::uint64_t max_order,
                                          const MultiIndex* cap = nullptr);
/// The same enumeration restricted to |β| == order exactly.
std::vector<MultiIndex> enumerate_indices_of_order(std::size_t positions, std::uint64_t order,
                                                   const MultiIndex* cap = nullptr);

}  // namespace charp

template <>
struct std::hash<charp::MultiIndex> {
  std::size_t operator()(const charp::MultiIndex& m) const noexcept { return m.hash(); }
};
