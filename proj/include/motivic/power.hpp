#ifndef MOTIVIC_POWER_HPP
#define MOTIVIC_POWER_HPP

#include "motivic/series.hpp"

namespace motivic {

/// Ordinary exponential of a series with zero constant term, in exact
/// rational arithmetic.
MSeries series_exp(const MSeries& f);
/// Ordinary logarithm of a series with constant term 1.
MSeries series_log(const MSeries& a);

/// The j-th Adams operation on a series: coefficients go through
/// adams(j, .) and t -> t^j.
MSeries adams_on_series(unsigned j, const MSeries& f);

/// Kapranov zeta of a class: (1-t)^{-m} = exp(sum_{j>=1} adams(j,m) t^j / j).
/// When m lies in the localization, every coefficient is checked to lie in
/// it too.
MSeries zeta_of_class(const MClass& m, std::size_t order);

/// Same series through the effective rule
///   (1-t)^{-sum a_k L^k} = prod_k (1 - L^k t)^{-a_k},
/// defined for Laurent polynomials in L with non-negative integer
/// coefficients only (contract_violation otherwise). Serves as an
/// independent cross-check of zeta_of_class.
MSeries zeta_effective(const MClass& m, std::size_t order);

/// Plethystic exponential Exp(f) = prod_{n>0} (1-t^n)^{-f_n}, computed as
/// exp(sum_{j>=1} psi_j(f)/j). Pre: f(0) = 0.
MSeries plethystic_exp(const MSeries& f);

/// Inverse of Exp by Moebius inversion over the Adams indices. Pre: A(0) = 1.
MSeries plethystic_log(const MSeries& a);

/// Power structure A(t)^m = Exp(m * Log(A)). Pre: A(0) = 1.
MSeries power(const MSeries& a, const MClass& m);

} // namespace motivic

#endif
