// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "layersort/pivots.hpp"

namespace layersort {

// {r}: r minus the largest power of two <= r (the exponent may be negative).
double frac2(double r);

// F(x) = x * floor(lg x) + 2{x}, the extraction-cost potential.
double F(double x);

// Per-heap extraction bound m(floor(lg m) - 1) + 2{m} + 4 floor(lg m).
double extraction_bound(std::size_t m);

// Worst-case extraction bound over a whole sort of n elements:
// n(floor(lg n) - 3) + 2{n} + 16 lg^2 n.
double total_extraction_bound(std::size_t n);

// n lg n + c n with c from the (strategy kind, improved) table; only
// meaningful for fixed samples of 1 or 3 and growing schedules.
double theorem1_bound(std::size_t n, const PivotStrategy& strategy, bool improved);

// lg(n!) as a compensated sum of lg i.
double lower_bound_lg_factorial(std::size_t n);

// Sequence constraint 2 x_i <= nu - sum_{j<i} x_j for all i.
bool valid_sequence(double nu, std::span<const double> xs);

// F(x) + F(y) <= F(x+delta) + F(y-delta) and F(x) + F(y) <= F(x+y),
// for x >= y > delta >= 0.
bool check_lemma1(double x, double y, double delta);

// sum F(x_i) <= sum_{i=1..floor(lg nu)} F(nu / 2^i) for sequences valid
// w.r.t. nu. Throws std::invalid_argument when the sequence is not valid.
bool check_lemma2(double nu, std::span<const double> xs);

// sum_{i=1..floor(lg n)} F(n / 2^i); compared against F(n) - 2n + 16 lg n.
double halving_sum(double n);

}  // namespace layersort
