// SPDX-License-Identifier: Apache-2.0
#include "layersort/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace layersort {

double frac2(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("frac2: requires r > 0");
  int e = std::ilogb(r);  // exact floor(lg r) for finite doubles
  return r - std::ldexp(1.0, e);
}

double F(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("F: requires x > 0");
  int e = std::ilogb(x);
  return x * e + 2.0 * (x - std::ldexp(1.0, e));
}

double extraction_bound(std::size_t m) {
  if (m == 0) throw std::invalid_argument("extraction_bound: m >= 1");
  double dm = static_cast<double>(m);
  double lg = std::floor(std::log2(dm));
  double bound = dm * (lg - 1.0) + 2.0 * frac2(dm) + 4.0 * lg;
  return bound < 0.0 ? 0.0 : bound;  // m = 1 extracts for free
}

double total_extraction_bound(std::size_t n) {
  if (n == 0) throw std::invalid_argument("total_extraction_bound: n >= 1");
  double dn = static_cast<double>(n);
  double lg = std::log2(dn);
  return dn * (std::floor(lg) - 3.0) + 2.0 * frac2(dn) + 16.0 * lg * lg;
}

double theorem1_bound(std::size_t n, const PivotStrategy& strategy, bool improved) {
  if (n < 2) throw std::invalid_argument("theorem1_bound: n >= 2");
  double c;
  switch (strategy.kind) {
    case PivotStrategy::Kind::FixedSample:
      if (strategy.fixed == 1) {
        c = improved ? 1.97 : 2.72;
      } else if (strategy.fixed == 3) {
        c = improved ? 1.17 : 1.92;
      } else {
        throw std::invalid_argument("theorem1_bound: fixed sample must be 1 or 3");
      }
      break;
    case PivotStrategy::Kind::Scheduled: c = improved ? -0.03 : 0.72; break;
    default: throw std::invalid_argument("theorem1_bound: no constant for this strategy");
  }
  double dn = static_cast<double>(n);
  return dn * std::log2(dn) + c * dn;
}

double lower_bound_lg_factorial(std::size_t n) {
  double sum = 0.0, carry = 0.0;
  for (std::size_t i = 2; i <= n; ++i) {
    double term = std::log2(static_cast<double>(i)) - carry;
    double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum;
}

bool valid_sequence(double nu, std::span<const double> xs) {
  double used = 0.0;
  for (double x : xs) {
    if (!(x > 0.0)) return false;
    if (2.0 * x > nu - used) return false;
    used += x;
  }
  return true;
}

bool check_lemma1(double x, double y, double delta) {
  if (!(x >= y && y > delta && delta >= 0.0))
    throw std::invalid_argument("check_lemma1: requires x >= y > delta >= 0");
  const double eps = 1e-9 * (1.0 + std::fabs(F(x)) + std::fabs(F(y)));
  bool exchange = F(x) + F(y) <= F(x + delta) + F(y - delta) + eps;
  bool superadditive = F(x) + F(y) <= F(x + y) + eps;
  return exchange && superadditive;
}

double halving_sum(double n) {
  double sum = 0.0;
  int steps = static_cast<int>(std::floor(std::log2(n)));
  for (int i = 1; i <= steps; ++i) sum += F(n / std::ldexp(1.0, i));
  return sum;
}

bool check_lemma2(double nu, std::span<const double> xs) {
  if (!valid_sequence(nu, xs)) throw std::invalid_argument("check_lemma2: sequence not valid");
  double lhs = 0.0;
  for (double x : xs) lhs += F(x);
  double rhs = halving_sum(nu);  // empty sum (= 0) for nu < 2
  return lhs <= rhs + 1e-9 * (1.0 + std::fabs(rhs));
}

}  // namespace layersort
