#pragma once

#include <vector>

#include "fsf/lambda.hpp"
#include "fsf/param_seq.hpp"
#include "fsf/partition.hpp"

namespace fsf {

enum class SchurRoute { jacobi_trudi, nagelsbach_kostka, giambelli };

/// Complete homogeneous polynomials of a finite list of numbers:
/// table[j][m] = h_m(values[0], ..., values[j-1]) for 0 <= j <= size, m <= max_degree.
std::vector<std::vector<Rational>> complete_homogeneous_table(const std::vector<Rational>& values, int max_degree);

/// h_{0;a}, ..., h_{K;a}, defined by 1 + sum_k h_{k;a} / (u|a)^k = H(u).
std::vector<LambdaElement> h_multi_all(const ParameterSequence& a, int max_k);
/// e_{0;a}, ..., e_{K;a}, defined by 1 + sum_k e_{k;a} / (u|dual a)^k = E(u).
std::vector<LambdaElement> e_multi_all(const ParameterSequence& a, int max_k);
LambdaElement h_multi(int k, const ParameterSequence& a);
LambdaElement e_multi(int k, const ParameterSequence& a);

/// Multiparameter Schur function s_{mu;a} by the chosen determinant.
LambdaElement s_multi(const Partition& mu, const ParameterSequence& a, SchurRoute route = SchurRoute::jacobi_trudi);
/// s_{(p|q);a}, the hook (p+1, 1^q).
LambdaElement hook_multi(int p, int q, const ParameterSequence& a);
/// Fs_mu = s_{mu;a} with a_i = i - 1/2.
LambdaElement fs_function(const Partition& mu);
/// det[T_{j-1}(Fh_{mu_i - i + j})], an independent form of Fs_mu.
LambdaElement fs_function_by_t_shift(const Partition& mu);
/// s_{lambda/mu;a} = det[h_{lambda_i - mu_j - i + j; tau^{mu_j - j + 1} a}].
LambdaElement s_multi_skew(const Partition& lambda, const Partition& mu, const ParameterSequence& a);

/// c_{p p'}(a, b) = h_{p - p'}(b_1..b_{p'+1}; -a_1..-a_p); zero unless
/// p >= p' >= 0.
Rational transition_coeff(int p, int p_prime, const ParameterSequence& a, const ParameterSequence& b);
/// c_{mu nu}(a, b), the coefficient of s_{nu;b} in s_{mu;a}.
Rational transition_entry(const Partition& mu, const Partition& nu, const ParameterSequence& a,
                          const ParameterSequence& b);
/// All nonzero c_{mu nu}(a, b) for fixed mu.
SchurExpansion transition_row(const Partition& mu, const ParameterSequence& a, const ParameterSequence& b);

/// s_{(p+1|q);a} + s_{(p|q+1);a} + (a_{p+1} + dual(a)_{q+1}) s_{(p|q);a}
/// == s_{(p|0);a} s_{(0|q);a}.
bool hook_identity_check(int p, int q, const ParameterSequence& a);

/// sum_{k <= N} hk[k] / (u|a)^k == H(u) to order N, where hk are supplied
/// candidates for h_{k;a}.
bool h_series_check(const std::vector<LambdaElement>& hk, const ParameterSequence& a, int order);
/// The same for e-functions against E(u) and the dual sequence.
bool e_series_check(const std::vector<LambdaElement>& ek, const ParameterSequence& a, int order);
/// 1 + (u+v) sum_{p,q} s_{(p|q);a} / ((u|a)^{p+1} (v|dual a)^{q+1}) == H(u) E(v)
/// on all coefficients of u^{-i} v^{-j} with i, j <= order.
bool hook_series_check(const ParameterSequence& a, int order);

}  // namespace fsf
