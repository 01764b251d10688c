#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbiklt/rational.hpp"

namespace orbiklt {

/// Orbifold multiplicity of a divisor component. The value 1 means the
/// component carries no orbifold structure.
class Multiplicity {
 public:
  explicit Multiplicity(std::int64_t value);

  std::int64_t value() const { return value_; }

  friend auto operator<=>(const Multiplicity&, const Multiplicity&) = default;

 private:
  std::int64_t value_;
};

/// Boundary coefficient 1 - 1/m.
Rational coeff(Multiplicity m);

/// Hirzebruch-Jung chain: the negated self-intersections e_1, ..., e_n of a
/// cyclic quotient resolution. Every entry is at least 2.
class HjChain {
 public:
  explicit HjChain(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  HjChain reversed() const;

  friend bool operator==(const HjChain&, const HjChain&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

struct CyclicType {
  std::int64_t n = 0;
  std::int64_t q = 0;
  friend bool operator==(const CyclicType&, const CyclicType&) = default;
};

/// Expands N/q = e_1 - 1/(e_2 - 1/(...)) with all e_i >= 2.
/// Requires 0 < q < N and gcd(N, q) = 1.
HjChain hj_expand(std::int64_t n, std::int64_t q);

/// Inverse of hj_expand.
CyclicType hj_evaluate(const HjChain& chain);

/// Greatest common divisor of a nonempty list of positive integers.
std::int64_t gcd_list(std::span<const std::int64_t> values);

std::string to_string(const HjChain& chain);

}  // namespace orbiklt
