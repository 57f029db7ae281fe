#pragma once

#include <utility>
#include <vector>

#include "fsf/partition.hpp"
#include "fsf/rational.hpp"

namespace fsf {

/// x (x-1) ... (x-m+1), and 1 for m = 0. Throws std::invalid_argument for
/// negative m.
Rational falling_factorial(const Rational& x, int m);

/// s*_mu(x_1..x_n) = det[(x_i+n-i)_{mu_j+n-j}] / det[(x_i+n-i)_{n-j}] with
/// falling factorial powers and n = max(l(mu), x.size()); the point is padded
/// with zeros. Throws std::domain_error if the denominator vanishes.
Rational shifted_schur_eval(const Partition& mu, const std::vector<Rational>& x);

/// The row lengths of lambda as a point.
std::vector<Rational> row_point(const Partition& lambda);

/// s*_mu(nu_1, nu_2, ...) / (|nu| falling |mu|), which is dim(mu,nu)/dim nu;
/// zero when |mu| > |nu|.
Rational dim_ratio_shifted(const Partition& mu, const Partition& nu);
/// Fs_mu at nu's half-integer Frobenius point over (|nu| falling |mu|); zero
/// when |mu| > |nu|.
Rational dim_ratio_fs(const Partition& mu, const Partition& nu);
/// dim(mu,nu)/dim nu by counting chains.
Rational dim_ratio_brute(const Partition& mu, const Partition& nu);

/// (s*_mu at the rows of lambda, Fs_mu at lambda's half-integer Frobenius
/// point).
std::pair<Rational, Rational> phi_sides(const Partition& mu, const Partition& lambda);
bool phi_check(const Partition& mu, const Partition& lambda);

/// At the point x, with h*_k = s*_(k) and e*_k = s*_(1^k), checks to order N
/// in 1/u that 1 + sum h*_k/(u)_k = prod (1+i/u)/(1+(i-x_i)/u),
/// 1 + sum e*_k/(u)_k = prod (1+(x_i-i+1)/u)/(1+(1-i)/u), and
/// H*(u) E*(-u-1) = 1.
bool shifted_series_check(int order, const std::vector<Rational>& x);

}  // namespace fsf
