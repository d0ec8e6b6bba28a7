#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charp/groebner.hpp"
#include "charp/jacobian.hpp"

namespace charp {

/// A nonnegative order, or +infinity for the zero polynomial / zero ideal.
class OrderValue {
 public:
  OrderValue() = default;  // infinity
  explicit OrderValue(std::uint64_t v) : value_(v) {}
  static OrderValue infinity() { return OrderValue(); }

  bool is_infinite() const noexcept { return !value_; }
  /// Requires !is_infinite().
  std::uint64_t value() const { return *value_; }

  auto operator<=>(const OrderValue& o) const noexcept {
    if (is_infinite() || o.is_infinite()) return is_infinite() <=> o.is_infinite();
    return *value_ <=> *o.value_;
  }
  bool operator==(const OrderValue& o) const noexcept { return value_ == o.value_; }
  bool at_least(std::uint64_t n) const noexcept { return is_infinite() || *value_ >= n; }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

 private:
  std::optional<std::uint64_t> value_;
};

/// D^beta(f_i), tagged with the generator index i and beta.
struct SaturationEntry {
  std::size_t generator;
  MultiIndex beta;
  Polynomial value;
};

struct SaturationResult {
  std::uint64_t n = 0;
  std::vector<SaturationEntry> entries;

  std::vector<Polynomial> generators() const;
};

/// All nonzero D^beta(f_i) with |beta| <= n, generator-major and by
/// increasing |beta|. The beta grid is split across `threads` workers.
SaturationResult diff_saturate(const Ideal& ideal, std::uint64_t n, unsigned threads = 1);

/// min{|beta| : D^beta(f) not in P}; infinite iff f = 0.
OrderValue order_at(const Polynomial& f, const PrimeSpec& prime);
OrderValue order_at(const Polynomial& f, const PrimeMembership& prime);
/// Minimum of order_at over the generators.
OrderValue ideal_order_at(const Ideal& ideal, const PrimeSpec& prime);

/// Generators of Diff^(N-1)(I), repeated polynomials removed. With reduce
/// set, the reduced Groebner basis instead.
Ideal order_locus(const Ideal& ideal, std::uint64_t n, bool reduce = false, unsigned threads = 1);

struct StratumLevel {
  std::uint64_t n;
  Ideal ideal;
  std::vector<SaturationEntry> provenance;
};

/// order_locus for N = 1..n_max, sharing one saturation.
std::vector<StratumLevel> stratify(const Ideal& ideal, std::uint64_t n_max, bool reduce = false,
                                   unsigned threads = 1);

/// Independent check of order_at at a rational point: translate the point to
/// the origin (clearing denominators by a unit of k) and take the lowest
/// total degree in the geometric variables.
OrderValue oracle_order_at_point(const Polynomial& f, const Point& point);

}  // namespace charp
