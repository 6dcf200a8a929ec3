#include "motivic/series.hpp"

#include <string>
#include <utility>

namespace motivic {

namespace {

void require_same_order(const MSeries& a, const MSeries& b, const char* op) {
    if (a.order() != b.order())
        throw order_mismatch(std::string(op) + ": series orders " + std::to_string(a.order()) +
                             " and " + std::to_string(b.order()) + " differ");
}

} // namespace

MSeries::MSeries(std::size_t order, std::vector<MClass> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1)
        throw order_mismatch("MSeries: expected " + std::to_string(order + 1) + " coefficients, got " +
                             std::to_string(coeffs_.size()));
}

MSeries MSeries::one(std::size_t order) {
    MSeries s(order);
    s.set(0, MClass(1));
    return s;
}

MSeries MSeries::term(std::size_t order, const MClass& c, unsigned e) {
    MSeries s(order);
    if (e <= order) s.set(e, c);
    return s;
}

MSeries MSeries::geometric(std::size_t order, const MClass& ratio) {
    MSeries s(order);
    MClass p(1);
    s.set(0, p);
    for (std::size_t n = 1; n <= order; ++n) {
        p = p * ratio;
        s.set(n, p);
    }
    return s;
}

MSeries s_add(const MSeries& a, const MSeries& b) {
    require_same_order(a, b, "s_add");
    MSeries r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) r.set(n, a[n] + b[n]);
    return r;
}

MSeries s_sub(const MSeries& a, const MSeries& b) {
    require_same_order(a, b, "s_sub");
    MSeries r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) r.set(n, a[n] - b[n]);
    return r;
}

MSeries s_mul(const MSeries& a, const MSeries& b) {
    require_same_order(a, b, "s_mul");
    const std::size_t N = a.order();
    MSeries r(N);
    for (std::size_t n = 0; n <= N; ++n) {
        MClass c;
        for (std::size_t i = 0; i <= n; ++i) {
            if (a[i].is_zero() || b[n - i].is_zero()) continue;
            c += a[i] * b[n - i];
        }
        r.set(n, std::move(c));
    }
    return r;
}

MSeries s_inv(const MSeries& a) {
    if (a[0].is_zero()) throw contract_violation("s_inv: constant term is not invertible");
    const std::size_t N = a.order();
    MSeries b(N);
    MClass c0inv = inv(a[0]);
    b.set(0, c0inv);
    // b_n = -(1/a_0) * sum_{k=1}^{n} a_k b_{n-k}
    for (std::size_t n = 1; n <= N; ++n) {
        MClass acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (a[k].is_zero() || b[n - k].is_zero()) continue;
            acc += a[k] * b[n - k];
        }
        b.set(n, -(c0inv * acc));
    }
    return b;
}

MSeries s_scale(const MSeries& a, const MClass& c) {
    MSeries r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n)
        if (!a[n].is_zero()) r.set(n, c * a[n]);
    return r;
}

MSeries substitute(const MSeries& a, const MClass& scale, unsigned e) {
    if (e < 1) throw contract_violation("substitute: exponent must be >= 1");
    const std::size_t N = a.order();
    MSeries r(N);
    MClass p(1);
    for (std::size_t n = 0; n * e <= N; ++n) {
        if (!a[n].is_zero()) r.set(n * e, p * a[n]);
        if ((n + 1) * e <= N) p = p * scale;
    }
    return r;
}

MSeries finite_product(std::span<const MSeries> factors, std::size_t order) {
    MSeries r = MSeries::one(order);
    for (const MSeries& f : factors) {
        require_same_order(r, f, "finite_product");
        r = s_mul(r, f);
    }
    return r;
}

MSeries tadic_product(const std::function<MSeries(unsigned)>& factor, std::size_t order) {
    MSeries r = MSeries::one(order);
    for (unsigned k = 1; k <= order; ++k) {
        MSeries f = factor(k);
        require_same_order(r, f, "tadic_product");
        if (!f[0].is_one())
            throw contract_violation("tadic_product: factor " + std::to_string(k) +
                                     " has constant term != 1");
        for (unsigned i = 1; i < k; ++i)
            if (!f[i].is_zero())
                throw contract_violation("tadic_product: factor " + std::to_string(k) +
                                         " is not 1 + O(t^" + std::to_string(k) + ")");
        r = s_mul(r, f);
    }
    return r;
}

MSeries pochhammer_inverse_sum(const MClass& u, unsigned k, std::size_t order) {
    if (k < 1) throw contract_violation("pochhammer_inverse_sum: k must be >= 1");
    MSeries r = MSeries::one(order);
    if (u.is_zero()) return r; // empty product
    // c_j = u^j L^{j(j-1)/2} / prod_{i=1}^{j} (L^i - 1), built incrementally:
    // c_j = c_{j-1} * u * L^{j-1} / (L^j - 1).
    MClass c(1);
    for (std::size_t j = 1; j * k <= order; ++j) {
        MClass lj_minus_1 = MClass::from_poly(IntPoly::monomial(static_cast<unsigned>(j)) -
                                              IntPoly::constant(1));
        c = c * u * MClass::lefschetz_power(static_cast<long>(j) - 1) / lj_minus_1;
        r.set(j * k, c);
    }
    return r;
}

} // namespace motivic
