#include "charp/ring.hpp"

#include <cctype>
#include <set>

#include "charp/error.hpp"
#include "charp/fp.hpp"

namespace charp {

const char* order_name(MonomialOrder order) noexcept {
  switch (order) {
    case MonomialOrder::Grevlex: return "grevlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::Block: return "block";
  }
  return "grevlex";
}

std::optional<MonomialOrder> parse_order(std::string_view tag) noexcept {
  if (tag == "grevlex") return MonomialOrder::Grevlex;
  if (tag == "lex") return MonomialOrder::Lex;
  if (tag == "block") return MonomialOrder::Block;
  return std::nullopt;
}

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

RingContext::RingContext(Key, std::uint32_t p, std::vector<BasisElement> basis,
                         std::size_t num_params, MonomialOrder order)
    : p_(p), basis_(std::move(basis)), num_params_(num_params), order_(order) {}

std::shared_ptr<const RingContext> RingContext::create(std::uint32_t p,
                                                       const std::vector<std::string>& base_params,
                                                       const std::vector<std::string>& variables,
                                                       MonomialOrder order) {
  if (p >= kMaxModulus)
    throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is too large");
  if (!is_prime(p)) throw Error(ErrorCode::CompositeModulus, std::to_string(p) + " is not prime");
  std::vector<BasisElement> basis;
  std::set<std::string> seen;
  auto push = [&](const std::string& name, BasisRole role) {
    if (!valid_identifier(name))
      throw Error(ErrorCode::InvalidArgument, "invalid basis name '" + name + "'");
    if (!seen.insert(name).second)
      throw Error(ErrorCode::DuplicateName, "basis name '" + name + "' repeated");
    basis.push_back({name, role, basis.size()});
  };
  for (const auto& n : base_params) push(n, BasisRole::BaseParameter);
  for (const auto& n : variables) push(n, BasisRole::GeometricVariable);
  return std::make_shared<const RingContext>(Key{}, p, std::move(basis), base_params.size(), order);
}

Ring ring_new(std::uint32_t p, const std::vector<std::string>& base_params,
              const std::vector<std::string>& variables) {
  return RingContext::create(p, base_params, variables);
}

std::optional<std::size_t> RingContext::find(std::string_view name) const noexcept {
  for (const auto& b : basis_)
    if (b.name == name) return b.position;
  return std::nullopt;
}

bool RingContext::compatible(const RingContext& other) const noexcept {
  if (this == &other) return true;
  return p_ == other.p_ && num_params_ == other.num_params_ && basis_ == other.basis_;
}

std::strong_ordering grevlex_compare(const MultiIndex& a, const MultiIndex& b, std::size_t first,
                                     std::size_t last) noexcept {
  auto da = a.order_in(first, last), db = b.order_in(first, last);
  if (da != db) return da <=> db;
  for (std::size_t i = last; i-- > first;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b, std::size_t first,
                                 std::size_t last) noexcept {
  for (std::size_t i = first; i < last; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering RingContext::compare(const MultiIndex& a, const MultiIndex& b) const noexcept {
  auto c = grevlex_compare(a, b, num_params_, basis_.size());
  if (c != 0) return c;
  return grevlex_compare(a, b, 0, num_params_);
}

}  // namespace charp
