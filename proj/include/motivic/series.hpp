#ifndef MOTIVIC_SERIES_HPP
#define MOTIVIC_SERIES_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "motivic/lring.hpp"

namespace motivic {

/// Power series in t over Q(L), truncated strictly at a fixed order N:
/// exactly N+1 coefficients, and arithmetic never looks past index N.
/// Operations between series of different orders throw order_mismatch
/// rather than re-truncating silently.
class MSeries {
public:
    explicit MSeries(std::size_t order) : coeffs_(order + 1) {}
    MSeries(std::size_t order, std::vector<MClass> coeffs);

    static MSeries one(std::size_t order);
    /// c * t^e (zero series when e > order).
    static MSeries term(std::size_t order, const MClass& c, unsigned e);
    /// Geometric series 1/(1 - ratio*t) = sum ratio^n t^n.
    static MSeries geometric(std::size_t order, const MClass& ratio);

    std::size_t order() const { return coeffs_.size() - 1; }
    const MClass& operator[](std::size_t n) const { return coeffs_[n]; }
    void set(std::size_t n, MClass v) { coeffs_[n] = std::move(v); }
    const std::vector<MClass>& coeffs() const { return coeffs_; }

    bool operator==(const MSeries&) const = default;

private:
    std::vector<MClass> coeffs_;
};

MSeries s_add(const MSeries& a, const MSeries& b);
MSeries s_sub(const MSeries& a, const MSeries& b);
MSeries s_mul(const MSeries& a, const MSeries& b);
/// Multiplicative inverse; requires an invertible constant term.
MSeries s_inv(const MSeries& a);
/// Coefficient-wise multiplication by a fixed class.
MSeries s_scale(const MSeries& a, const MClass& c);

/// t -> scale * t^e: coefficient of t^{en} becomes scale^n * c_n, all other
/// coefficients vanish. Pre: e >= 1. Truncation order is preserved.
MSeries substitute(const MSeries& a, const MClass& scale, unsigned e);

/// Product of finitely many series, all of order N; 1 for an empty list.
MSeries finite_product(std::span<const MSeries> factors, std::size_t order);

/// Product over k >= 1 of factor(k), where factor(k) = 1 + O(t^k); the
/// guarantee (checked, contract_violation otherwise) makes the product
/// t-adically convergent, so factors with k > N contribute nothing.
MSeries tadic_product(const std::function<MSeries(unsigned)>& factor, std::size_t order);

/// prod_{m>=1} (1 - u L^{-m} t^k)^{-1}, resummed exactly by Euler's
/// q-series identity: the coefficient of t^{k j} is
///   u^j L^{j(j-1)/2} / prod_{i=1}^{j} (L^i - 1).
/// The product does not truncate t-adically in m; this closed form is the
/// exact value in Q(L).
MSeries pochhammer_inverse_sum(const MClass& u, unsigned k, std::size_t order);

} // namespace motivic

#endif
