#include "tlpp/compositions.hpp"

#include <bit>
#include <map>
#include <string>

#include "tlpp/error.hpp"
#include "tlpp/qpowers.hpp"

namespace tlpp {

namespace {

void check_limit(unsigned m, unsigned limit) {
  if (m > limit) {
    throw DomainError("composition enumeration for " + std::to_string(m) +
                      " exceeds the limit of " + std::to_string(limit) +
                      " (2^(m-1) terms); raise the limit explicitly");
  }
  if (m > 62) throw DomainError("composition enumeration beyond 62 is not representable");
}

// Bit g of `cuts` set means a part ends after unit g+1. Calls
// emit(length, exponent) once per composition of m.
template <typename Emit>
void enumerate_cut_masks(unsigned m, Emit&& emit) {
  if (m == 0) {
    emit(std::size_t{0}, std::uint64_t{0});
    return;
  }
  const std::uint64_t masks = std::uint64_t{1} << (m - 1);
  for (std::uint64_t cuts = 0; cuts < masks; ++cuts) {
    std::uint64_t exponent = 0;
    unsigned start = 0;
    std::uint64_t rest = cuts;
    while (rest != 0) {
      const unsigned gap = static_cast<unsigned>(std::countr_zero(rest));
      const unsigned part = gap + 1 - start;
      exponent += binomial2(part + 1);
      start = gap + 1;
      rest &= rest - 1;
    }
    exponent += binomial2(m - start + 1);
    emit(static_cast<std::size_t>(std::popcount(cuts)) + 1, exponent);
  }
}

Rational signed_power_sum(const std::map<std::uint64_t, std::int64_t>& counts, const Rational& q) {
  Rational acc(0);
  for (const auto& [exponent, count] : counts) {
    if (count != 0) acc += Rational(static_cast<long>(count)) * pow(q, exponent);
  }
  return acc;
}

}  // namespace

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned a : parts_) {
    if (a == 0) throw DomainError("composition parts must be positive");
    target_ += a;
  }
}

std::uint64_t Composition::weight_exponent() const {
  std::uint64_t e = 0;
  for (unsigned a : parts_) e += binomial2(a + 1);
  return e;
}

void for_each_composition(unsigned m, const std::function<void(const Composition&)>& visit,
                          unsigned limit) {
  check_limit(m, limit);
  if (m == 0) {
    visit(Composition({}));
    return;
  }
  const std::uint64_t masks = std::uint64_t{1} << (m - 1);
  std::vector<unsigned> parts;
  for (std::uint64_t cuts = 0; cuts < masks; ++cuts) {
    parts.clear();
    unsigned start = 0;
    for (unsigned gap = 0; gap + 1 < m; ++gap) {
      if ((cuts >> gap) & 1U) {
        parts.push_back(gap + 1 - start);
        start = gap + 1;
      }
    }
    parts.push_back(m - start);
    visit(Composition(parts));
  }
}

std::uint64_t composition_count(unsigned m) { return m == 0 ? 1 : std::uint64_t{1} << (m - 1); }

Rational h_by_compositions(unsigned m, const Rational& q, unsigned limit) {
  check_limit(m, limit);
  std::map<std::uint64_t, std::int64_t> counts;
  enumerate_cut_masks(m, [&](std::size_t length, std::uint64_t exponent) {
    counts[exponent] += (length % 2 == 0) ? 1 : -1;
  });
  return signed_power_sum(counts, q);
}

Rational g_by_compositions(unsigned n, const Rational& q, unsigned limit) {
  if (n == 0) return Rational(1);
  check_limit(n - 1, limit);
  Rational g(0);
  for (unsigned m = 0; m < n; ++m) g += Rational(static_cast<long>(n - m)) * h_by_compositions(m, q, limit);
  return g;
}

Rational g_by_triangular_sum(unsigned n, const Rational& q, unsigned limit) {
  if (n == 0) return Rational(1);
  check_limit(n - 1, limit);
  // by_length[j][k] = sum over C_{j,k} of q^{sum C(a_i+1,2)}, grouped by exponent.
  std::vector<std::vector<std::map<std::uint64_t, std::int64_t>>> by_length(n);
  for (unsigned j = 0; j < n; ++j) {
    by_length[j].resize(j + 1);
    enumerate_cut_masks(j, [&](std::size_t length, std::uint64_t exponent) {
      by_length[j][length][exponent] += 1;
    });
  }
  Rational g(0);
  for (unsigned m = 0; m < n; ++m) {
    for (unsigned j = 0; j <= m; ++j) {
      for (unsigned k = 0; k <= j; ++k) {
        const Rational inner = signed_power_sum(by_length[j][k], q);
        if (k % 2 == 0) {
          g += inner;
        } else {
          g -= inner;
        }
      }
    }
  }
  return g;
}

}  // namespace tlpp
