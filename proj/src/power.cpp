#include "motivic/power.hpp"

#include <string>
#include <vector>

namespace motivic {

namespace {

std::vector<int> mobius_table(std::size_t n) {
    std::vector<int> mu(n + 1, 1);
    std::vector<bool> composite(n + 1, false);
    std::vector<std::size_t> primes;
    for (std::size_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (std::size_t p : primes) {
            if (i * p > n) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

} // namespace

MSeries series_exp(const MSeries& f) {
    if (!f[0].is_zero()) throw contract_violation("series_exp: nonzero constant term");
    const std::size_t N = f.order();
    MSeries e(N);
    e.set(0, MClass(1));
    // E' = f' E gives n e_n = sum_{k=1}^{n} k f_k e_{n-k}.
    for (std::size_t n = 1; n <= N; ++n) {
        MClass acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k].is_zero() || e[n - k].is_zero()) continue;
            acc += MClass(static_cast<long>(k)) * f[k] * e[n - k];
        }
        e.set(n, acc * MClass::rational(1, static_cast<long>(n)));
    }
    return e;
}

MSeries series_log(const MSeries& a) {
    if (!a[0].is_one()) throw contract_violation("series_log: constant term != 1");
    const std::size_t N = a.order();
    MSeries g(N);
    // n a_n = sum_{k=1}^{n} k g_k a_{n-k}, solved for g_n.
    for (std::size_t n = 1; n <= N; ++n) {
        MClass acc;
        for (std::size_t k = 1; k < n; ++k) {
            if (g[k].is_zero() || a[n - k].is_zero()) continue;
            acc += MClass(static_cast<long>(k)) * g[k] * a[n - k];
        }
        g.set(n, a[n] - acc * MClass::rational(1, static_cast<long>(n)));
    }
    return g;
}

MSeries adams_on_series(unsigned j, const MSeries& f) {
    const std::size_t N = f.order();
    MSeries r(N);
    for (std::size_t i = 0; i * j <= N; ++i)
        if (!f[i].is_zero()) r.set(i * j, adams(j, f[i]));
    return r;
}

MSeries plethystic_exp(const MSeries& f) {
    if (!f[0].is_zero()) throw contract_violation("plethystic_exp: f(0) must be 0");
    const std::size_t N = f.order();
    MSeries g(N);
    for (unsigned j = 1; j <= N; ++j) {
        MSeries psi = adams_on_series(j, f);
        g = s_add(g, s_scale(psi, MClass::rational(1, j)));
    }
    return series_exp(g);
}

MSeries plethystic_log(const MSeries& a) {
    if (!a[0].is_one()) throw contract_violation("plethystic_log: A(0) must be 1");
    const std::size_t N = a.order();
    MSeries g = series_log(a);
    MSeries f(N);
    auto mu = mobius_table(N);
    for (unsigned k = 1; k <= N; ++k) {
        if (mu[k] == 0) continue;
        MSeries psi = adams_on_series(k, g);
        f = s_add(f, s_scale(psi, MClass::rational(mu[k], k)));
    }
    return f;
}

MSeries power(const MSeries& a, const MClass& m) {
    if (!a[0].is_one()) throw contract_violation("power: A(0) must be 1");
    if (m.is_zero()) return MSeries::one(a.order());
    return plethystic_exp(s_scale(plethystic_log(a), m));
}

MSeries zeta_of_class(const MClass& m, std::size_t order) {
    MSeries z = plethystic_exp(MSeries::term(order, m, 1));
    if (in_localization(m)) {
        for (std::size_t n = 0; n <= order; ++n)
            if (!in_localization(z[n]))
                throw contract_violation("zeta_of_class: coefficient " + std::to_string(n) +
                                         " left the localization");
    }
    return z;
}

MSeries zeta_effective(const MClass& m, std::size_t order) {
    auto laurent = is_laurent_polynomial(m);
    if (!laurent)
        throw contract_violation("zeta_effective: class is not a Laurent polynomial in L");
    MSeries r = MSeries::one(order);
    for (const auto& [e, c] : *laurent) {
        if (c < 0)
            throw contract_violation("zeta_effective: coefficient of L^" + std::to_string(e) +
                                     " is negative");
        MSeries factor = MSeries::geometric(order, MClass::lefschetz_power(e));
        for (Integer i = 0; i < c; ++i) r = s_mul(r, factor);
    }
    return r;
}

} // namespace motivic
