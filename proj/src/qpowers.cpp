#include "tlpp/qpowers.hpp"

#include <string>

#include "tlpp/error.hpp"

namespace tlpp {

Rational q_triangular_power(const Rational& q, std::uint64_t k) { return pow(q, binomial2(k)); }

QPowers::QPowers(Rational q, std::size_t k_max) : q_(std::move(q)), k_max_(k_max) {
  table_.reserve(k_max + 2);
  table_.emplace_back(1);  // C(0,2) = 0
  Rational q_to_k(1);      // q^k, starting at k = 0
  for (std::size_t k = 0; k <= k_max; ++k) {
    // C(k+1,2) = C(k,2) + k
    table_.push_back(table_.back() * q_to_k);
    q_to_k *= q_;
  }
}

const Rational& QPowers::triangular(std::size_t k) const {
  if (k >= table_.size()) {
    throw DomainError("QPowers index " + std::to_string(k) + " beyond table of size " +
                      std::to_string(table_.size()));
  }
  return table_[k];
}

}  // namespace tlpp
