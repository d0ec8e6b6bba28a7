#include "charp/multi_index.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace charp {

MultiIndex::MultiIndex(std::vector<Exponent> exponents) : exps_(std::move(exponents)) { trim(); }

MultiIndex::MultiIndex(std::initializer_list<Exponent> exponents) : exps_(exponents) { trim(); }

MultiIndex MultiIndex::unit(std::size_t position, Exponent e) { return MultiIndex{}.with(position, e); }

void MultiIndex::trim() noexcept {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

std::uint64_t MultiIndex::order() const noexcept {
  std::uint64_t total = 0;
  for (Exponent e : exps_) total += e;
  return total;
}

std::uint64_t MultiIndex::order_in(std::size_t first, std::size_t last) const noexcept {
  std::uint64_t total = 0;
  for (std::size_t i = first; i < last && i < exps_.size(); ++i) total += exps_[i];
  return total;
}

MultiIndex MultiIndex::with(std::size_t position, Exponent e) const {
  MultiIndex out = *this;
  if (position >= out.exps_.size()) {
    if (e == 0) return out;
    out.exps_.resize(position + 1, 0);
  }
  out.exps_[position] = e;
  out.trim();
  return out;
}

bool MultiIndex::le(const MultiIndex& other) const noexcept {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  std::vector<Exponent> out(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return MultiIndex(std::move(out));
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  assert(b.le(a));
  std::vector<Exponent> out(a.length(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return MultiIndex(std::move(out));
}

MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
  std::vector<Exponent> out(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return MultiIndex(std::move(out));
}

std::size_t MultiIndex::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : exps_) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void fill(std::size_t pos, std::size_t positions, std::uint64_t remaining,
          const MultiIndex* cap, std::vector<Exponent>& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == positions) {
    Exponent bound = cap ? (*cap)[pos] : std::numeric_limits<Exponent>::max();
    if (remaining <= bound) {
      cur[pos] = static_cast<Exponent>(remaining);
      out.emplace_back(cur);
      cur[pos] = 0;
    }
    return;
  }
  std::uint64_t hi = remaining;
  if (cap) hi = std::min<std::uint64_t>(hi, (*cap)[pos]);
  for (std::uint64_t e = hi + 1; e-- > 0;) {
    cur[pos] = static_cast<Exponent>(e);
    fill(pos + 1, positions, remaining - e, cap, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> enumerate_indices_of_order(std::size_t positions, std::uint64_t order,
                                                   const MultiIndex* cap) {
  std::vector<MultiIndex> out;
  if (positions == 0) {
    if (order == 0) out.emplace_back();
    return out;
  }
  std::vector<Exponent> cur(positions, 0);
  fill(0, positions, order, cap, cur, out);
  return out;
}

std::vector<MultiIndex> enumerate_indices(std::size_t positions, std::uint64_t max_order,
                                          const MultiIndex* cap) {
  std::vector<MultiIndex> out;
  for (std::uint64_t k = 0; k <= max_order; ++k) {
    auto level = enumerate_indices_of_order(positions, k, cap);
    if (level.empty() && k > 0 && cap && cap->order() < k) break;
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace charp
