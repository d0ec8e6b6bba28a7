#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charp/multi_index.hpp"

namespace charp {

enum class BasisRole { BaseParameter, GeometricVariable };

/// One element of the canonical absolute p-basis {v_1..v_m, x_1..x_n}.
struct BasisElement {
  std::string name;
  BasisRole role;
  std::size_t position;

  bool operator==(const BasisElement&) const = default;
};

enum class MonomialOrder {
  Grevlex,
  Lex,
  /// Geometric variables compared by grevlex first, base parameters last.
  /// Over k = F_p(v) the parameters are coefficients, so for Groebner work
  /// this agrees with Grevlex.
  Block,
};

const char* order_name(MonomialOrder order) noexcept;
std::optional<MonomialOrder> parse_order(std::string_view tag) noexcept;

/// The ring F_p[v_1..v_m, x_1..x_n] standing in for k[x] with k = F_p(v).
/// Basis positions [0, m) are base parameters, [m, m + n) geometric variables.
class RingContext {
  struct Key {};

 public:
  RingContext(Key, std::uint32_t p, std::vector<BasisElement> basis, std::size_t num_params,
              MonomialOrder order);

  static std::shared_ptr<const RingContext> create(std::uint32_t p,
                                                   const std::vector<std::string>& base_params,
                                                   const std::vector<std::string>& variables,
                                                   MonomialOrder order = MonomialOrder::Grevlex);

  std::uint32_t modulus() const noexcept { return p_; }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  std::size_t num_params() const noexcept { return num_params_; }
  std::size_t num_variables() const noexcept { return basis_.size() - num_params_; }
  /// Position of the first geometric variable.
  std::size_t first_variable() const noexcept { return num_params_; }
  MonomialOrder default_order() const noexcept { return order_; }

  const BasisElement& element(std::size_t position) const { return basis_.at(position); }
  std::optional<std::size_t> find(std::string_view name) const noexcept;
  bool is_parameter(std::size_t position) const noexcept { return position < num_params_; }

  /// Same modulus and the same basis names and roles in the same order.
  bool compatible(const RingContext& other) const noexcept;

  /// Canonical term order: grevlex on the geometric part, ties broken by
  /// grevlex on the parameter part. A monomial order on the whole basis.
  std::strong_ordering compare(const MultiIndex& a, const MultiIndex& b) const noexcept;

 private:
  std::uint32_t p_;
  std::vector<BasisElement> basis_;
  std::size_t num_params_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const RingContext>;

/// Validates p and the names; basis is base_params followed by variables.
Ring ring_new(std::uint32_t p, const std::vector<std::string>& base_params,
              const std::vector<std::string>& variables);

/// Grevlex restricted to positions [first, last).
std::strong_ordering grevlex_compare(const MultiIndex& a, const MultiIndex& b, std::size_t first,
                                     std::size_t last) noexcept;
/// Lex restricted to positions [first, last), earlier positions dominant.
std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b, std::size_t first,
                                 std::size_t last) noexcept;

}  // namespace charp
