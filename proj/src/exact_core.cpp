#include "orbiklt/exact_core.hpp"

#include <algorithm>
#include <numeric>

#include "orbiklt/errors.hpp"

namespace orbiklt {

Multiplicity::Multiplicity(std::int64_t value) : value_(value) {
  if (value < 1) throw InvalidArgument("multiplicity must be >= 1, got " + std::to_string(value));
}

Rational coeff(Multiplicity m) { return Rational(1) - Rational(1, m.value()); }

HjChain::HjChain(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("Hirzebruch-Jung chain must be nonempty");
  for (auto e : entries_) {
    if (e < 2) throw InvalidArgument("Hirzebruch-Jung entries must be >= 2, got " + std::to_string(e));
  }
}

HjChain HjChain::reversed() const {
  std::vector<std::int64_t> r(entries_.rbegin(), entries_.rend());
  return HjChain(std::move(r));
}

HjChain hj_expand(std::int64_t n, std::int64_t q) {
  if (!(0 < q && q < n)) {
    throw InvalidArgument("hj_expand needs 0 < q < N, got N=" + std::to_string(n) + " q=" + std::to_string(q));
  }
  if (std::gcd(n, q) != 1) {
    throw InvalidArgument("hj_expand needs gcd(N,q)=1, got N=" + std::to_string(n) + " q=" + std::to_string(q));
  }
  std::vector<std::int64_t> entries;
  while (q != 0) {
    const std::int64_t e = (n + q - 1) / q;
    entries.push_back(e);
    const std::int64_t next = e * q - n;
    n = q;
    q = next;
  }
  return HjChain(std::move(entries));
}

CyclicType hj_evaluate(const HjChain& chain) {
  // Fold from the tail: value = e - 1/value_tail, kept as num/den.
  const auto& e = chain.entries();
  std::int64_t num = e.back();
  std::int64_t den = 1;
  for (auto it = e.rbegin() + 1; it != e.rend(); ++it) {
    const std::int64_t next_num = *it * num - den;
    den = num;
    num = next_num;
  }
  return {num, den};
}

std::int64_t gcd_list(std::span<const std::int64_t> values) {
  if (values.empty()) throw InvalidArgument("gcd_list of an empty list");
  std::int64_t g = 0;
  for (auto v : values) {
    if (v < 1) throw InvalidArgument("gcd_list values must be positive, got " + std::to_string(v));
    g = std::gcd(g, v);
  }
  return g;
}

std::string to_string(const HjChain& chain) {
  std::string out = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(chain.entries()[i]);
  }
  return out + "]";
}

}  // namespace orbiklt
