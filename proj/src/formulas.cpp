#include "motivic/formulas.hpp"

#include <utility>

#include "motivic/oracle.hpp"

namespace motivic {

IdentityReport make_identity_report(std::string name, const MSeries& lhs, const MSeries& rhs) {
    if (lhs.order() != rhs.order())
        throw order_mismatch("identity report: operand orders differ");
    IdentityReport rep;
    rep.name = std::move(name);
    rep.order = lhs.order();
    rep.holds = true;
    for (std::size_t n = 0; n <= lhs.order(); ++n) {
        bool eq = lhs[n] == rhs[n]; // canonical form, so representation equality
        rep.rows.push_back({n, lhs[n], rhs[n], eq});
        if (!eq) rep.holds = false;
    }
    return rep;
}

MSeries coh_a1_series(std::size_t order) {
    MSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        MClass c = MClass::lefschetz_power(static_cast<long>(n * n)) / gl_class(static_cast<unsigned>(n));
        s.set(n, std::move(c));
    }
    return s;
}

MSeries euler_rhs_series(std::size_t order) {
    // prod_{k>=0} (1 - L^{-k} t)^{-1}: the k = 0 factor is 1/(1-t), the rest
    // is the resummed m >= 1 product with u = 1.
    MSeries k0 = MSeries::geometric(order, MClass(1));
    return s_mul(k0, pochhammer_inverse_sum(MClass(1), 1, order));
}

MSeries feit_fine_series(std::size_t order) {
    MClass l2 = MClass::lefschetz_power(2);
    return tadic_product(
        [&](unsigned k) { return pochhammer_inverse_sum(l2, k, order); }, order);
}

MSeries zeta_affine_line(std::size_t order) { return MSeries::geometric(order, MClass::lefschetz()); }
MSeries zeta_point(std::size_t order) { return MSeries::geometric(order, MClass(1)); }
MSeries zeta_p1(std::size_t order) { return s_mul(zeta_point(order), zeta_affine_line(order)); }

MSeries quot_curve_series(unsigned r, const MSeries& zeta_C, std::size_t order) {
    if (r < 1) throw contract_violation("quot_curve_series: r must be >= 1");
    if (zeta_C.order() != order)
        throw order_mismatch("quot_curve_series: zeta order != requested order");
    if (!zeta_C[0].is_one())
        throw contract_violation("quot_curve_series: zeta constant term must be 1");
    std::vector<MSeries> factors;
    factors.reserve(r);
    for (unsigned i = 1; i <= r; ++i)
        factors.push_back(substitute(zeta_C, MClass::lefschetz_power(i - 1), 1));
    return finite_product(factors, order);
}

MSeries quot_surface_series(unsigned r, const MClass& S_class, std::size_t order) {
    if (r < 1) throw contract_violation("quot_surface_series: r must be >= 1");
    if (!S_class.den().is_one())
        throw contract_violation("quot_surface_series: surface class must be a polynomial in L");
    // [S x P^{r-1}] t / (1 - L^r t): coefficient of t^n is
    // S_class (1 + L + ... + L^{r-1}) L^{r(n-1)} for n >= 1.
    MClass proj;
    for (unsigned i = 0; i < r; ++i) proj += MClass::lefschetz_power(i);
    MClass a = S_class * proj;
    MClass lr = MClass::lefschetz_power(r);
    MSeries f(order);
    for (std::size_t n = 1; n <= order; ++n) {
        f.set(n, a);
        a = a * lr;
    }
    return plethystic_exp(f);
}

MSeries punctual_series_smooth(unsigned d, std::size_t order) {
    switch (d) {
    case 1:
        return power(coh_a1_series(order), MClass::lefschetz_power(-1));
    case 2:
        return power(feit_fine_series(order), MClass::lefschetz_power(-2));
    default:
        throw contract_violation("punctual_series_smooth: d must be 1 or 2");
    }
}

MSeries quot_punctual_smooth(unsigned r, unsigned d, std::size_t order) {
    switch (d) {
    case 1:
        return power(quot_curve_series(r, zeta_affine_line(order), order),
                     MClass::lefschetz_power(-1));
    case 2:
        return power(quot_surface_series(r, MClass::lefschetz_power(2), order),
                     MClass::lefschetz_power(-2));
    default:
        throw contract_violation("quot_punctual_smooth: d must be 1 or 2");
    }
}

MSeries compose_with_singularities(const MSeries& smooth_punctual,
                                   const MClass& smooth_locus_class,
                                   std::span<const SingularityDatum> singularities) {
    if (!smooth_punctual[0].is_one())
        throw contract_violation("compose_with_singularities: punctual series must start with 1");
    MSeries z = power(smooth_punctual, smooth_locus_class);
    for (const SingularityDatum& s : singularities) {
        if (!s.punctual_series[0].is_one())
            throw contract_violation(
                "compose_with_singularities: singular punctual series must start with 1");
        for (unsigned i = 0; i < s.multiplicity; ++i) z = s_mul(z, s.punctual_series);
    }
    return z;
}

std::vector<IdentityReport> verify_strata_decomposition(std::size_t order) {
    std::vector<IdentityReport> reports;
    MClass gm = MClass::lefschetz() - MClass(1); // [G_m]

    // Coh over A^1, Z = {0}: closed form against punctual^{[G_m]} * punctual.
    {
        MSeries zsm = punctual_series_smooth(1, order);
        SingularityDatum origin{zsm, 1};
        MSeries rhs = compose_with_singularities(zsm, gm, std::span(&origin, 1));
        reports.push_back(make_identity_report("coh-a1-strata", coh_a1_series(order), rhs));
    }
    // Quot over A^1, Z = {0}, r = 1, 2.
    for (unsigned r = 1; r <= 2; ++r) {
        MSeries full = quot_curve_series(r, zeta_affine_line(order), order);
        MSeries qsm = quot_punctual_smooth(r, 1, order);
        SingularityDatum origin{qsm, 1};
        MSeries rhs = compose_with_singularities(qsm, gm, std::span(&origin, 1));
        reports.push_back(
            make_identity_report("quot-a1-r" + std::to_string(r) + "-strata", full, rhs));
    }
    return reports;
}

FibrationFailureReport fibration_failure_report() {
    FibrationFailureReport rep;
    const MClass L = MClass::lefschetz();
    MSeries coh = coh_a1_series(2);
    MSeries punct = punctual_series_smooth(1, 2);

    rep.coh2 = coh[2];
    rep.punctual2 = punct[2];
    rep.punctual1 = punct[1];
    // The (2^1) stratum (support at one point) is Zariski-trivial over A^1,
    // so its class is L * punctual2; the (1^2) stratum is the rest.
    rep.stratum = rep.coh2 - L * rep.punctual2;
    rep.stratum_gl1_aut = inv(L * L - MClass(1));
    rep.sym_stratum = L * L - L;
    rep.product = rep.sym_stratum * rep.punctual1 * rep.punctual1;
    rep.non_multiplicative = !(rep.stratum == rep.product);

    for (unsigned q : {2u, 3u}) {
        FibrationFailureReport::Eval ev;
        ev.q = q;
        ev.stratum = eval_at(rep.stratum, Rational(q));
        ev.stratum_gl1_aut = eval_at(rep.stratum_gl1_aut, Rational(q));
        ev.product = eval_at(rep.product, Rational(q));
        ev.groupoid = count_coh_a1_two_point_stratum(q).value;
        rep.evals.push_back(std::move(ev));
    }
    return rep;
}

PolynomialityReport polynomiality_report(const MSeries& series) {
    PolynomialityReport rep;
    rep.all_laurent = true;
    rep.all_in_localization = true;
    for (std::size_t n = 0; n <= series.order(); ++n) {
        bool laurent = is_laurent_polynomial(series[n]).has_value();
        bool in_loc = in_localization(series[n]);
        rep.rows.push_back({n, laurent, in_loc});
        rep.all_laurent &= laurent;
        rep.all_in_localization &= in_loc;
    }
    return rep;
}

IdentityReport verify_euler_identity(std::size_t order) {
    return make_identity_report("euler", coh_a1_series(order), euler_rhs_series(order));
}

std::vector<IdentityReport> verify_punctual_roundtrip(std::size_t order) {
    std::vector<IdentityReport> reports;
    for (unsigned d : {1u, 2u}) {
        MSeries full = d == 1 ? coh_a1_series(order) : feit_fine_series(order);
        MSeries back = power(punctual_series_smooth(d, order),
                             MClass::lefschetz_power(static_cast<long>(d)));
        reports.push_back(
            make_identity_report("punctual-roundtrip-d" + std::to_string(d), full, back));
    }
    return reports;
}

// ---------------------------------------------------------------------------
// Randomized power-structure suite
// ---------------------------------------------------------------------------

namespace {

struct Rng {
    // xorshift-style splitmix so results do not depend on the standard
    // library's distribution implementations
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

MClass random_poly_class(Rng& rng, unsigned max_deg, long max_coeff) {
    IntPoly p;
    for (unsigned e = 0; e <= max_deg; ++e)
        p = p + IntPoly::monomial(e, Integer(rng.range(-max_coeff, max_coeff)));
    return MClass::from_poly(p);
}

MSeries random_unit_series(Rng& rng, std::size_t order) {
    MSeries a(order);
    a.set(0, MClass(1));
    for (std::size_t n = 1; n <= order; ++n) a.set(n, random_poly_class(rng, 2, 3));
    return a;
}

MClass random_exponent(Rng& rng) {
    const MClass L = MClass::lefschetz();
    switch (rng.next() % 6) {
    case 0: return MClass(rng.range(-2, 3));
    case 1: return L;
    case 2: return L * L;
    case 3: return L + MClass(1);
    case 4: return inv(L - MClass(1));
    default: return MClass(rng.range(0, 2)) + L * MClass(rng.range(-1, 1));
    }
}

MClass random_effective_laurent(Rng& rng) {
    MClass m;
    for (long e = -2; e <= 3; ++e)
        m += MClass::lefschetz_power(e) * MClass(rng.range(0, 3));
    return m;
}

bool series_in_localization(const MSeries& s) {
    for (std::size_t n = 0; n <= s.order(); ++n)
        if (!in_localization(s[n])) return false;
    return true;
}

} // namespace

AxiomSuiteResult power_axiom_suite(std::size_t order, std::uint64_t seed, unsigned instances) {
    AxiomSuiteResult res;
    res.order = order;
    res.seed = seed;
    res.instances = instances;

    std::vector<AxiomSuiteResult::Check> checks = {
        {"axiom-1 A^0 = 1"},
        {"axiom-2 A^1 = A"},
        {"axiom-3 (AB)^m = A^m B^m"},
        {"axiom-4 A^(m+m') = A^m A^m'"},
        {"axiom-5 A^(mm') = (A^m)^m'"},
        {"axiom-6 (1+t)^m = 1 + m t + O(t^2)"},
        {"axiom-7 A(t)^m | t->t^e = A(t^e)^m"},
        {"exp-log Exp(Log(A)) = A"},
        {"log-exp Log(Exp(f)) = f"},
        {"zeta-effective cross-check"},
        {"localization-closure"},
    };
    auto record = [&](unsigned idx, bool ok, unsigned instance) {
        if (ok) {
            ++checks[idx].passed;
        } else {
            ++checks[idx].failed;
            res.failures.push_back(checks[idx].name + " failed on instance " +
                                   std::to_string(instance));
        }
    };

    Rng rng(seed);
    for (unsigned i = 0; i < instances; ++i) {
        MSeries a = random_unit_series(rng, order);
        MSeries b = random_unit_series(rng, order);
        MClass m = random_exponent(rng);
        MClass m2 = random_exponent(rng);
        unsigned e = static_cast<unsigned>(rng.range(1, 3));

        record(0, power(a, MClass(0)) == MSeries::one(order), i);
        record(1, power(a, MClass(1)) == a, i);
        MSeries am = power(a, m);
        MSeries bm = power(b, m);
        record(2, power(s_mul(a, b), m) == s_mul(am, bm), i);
        record(3, power(a, m + m2) == s_mul(am, power(a, m2)), i);
        record(4, power(a, m * m2) == power(am, m2), i);
        {
            MSeries one_plus_t = s_add(MSeries::one(order), MSeries::term(order, MClass(1), 1));
            MSeries p = power(one_plus_t, m);
            record(5, p[0].is_one() && p[1] == m, i);
        }
        record(6, substitute(am, MClass(1), e) == power(substitute(a, MClass(1), e), m), i);
        record(7, plethystic_exp(plethystic_log(a)) == a, i);
        {
            MSeries f(order);
            for (std::size_t n = 1; n <= order; ++n) f.set(n, random_poly_class(rng, 2, 3));
            record(8, plethystic_log(plethystic_exp(f)) == f, i);
        }
        {
            MClass eff = random_effective_laurent(rng);
            record(9, zeta_of_class(eff, order) == zeta_effective(eff, order), i);
        }
        // coefficients of a are polynomials and every exponent draw lies in
        // the localization, so the output must stay inside it
        record(10, series_in_localization(am), i);
    }

    res.checks = std::move(checks);
    res.all_passed = res.failures.empty();
    return res;
}

} // namespace motivic
