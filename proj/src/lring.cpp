#include "motivic/lring.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace motivic {

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(Integer c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(unsigned exp, Integer c) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(exp + 1, Integer(0));
        p.coeffs_[exp] = std::move(c);
    }
    return p;
}

IntPoly IntPoly::from_coeffs(std::vector<Integer> coeffs) {
    IntPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

const Integer& IntPoly::coeff(std::size_t exp) const {
    static const Integer zero(0);
    return exp < coeffs_.size() ? coeffs_[exp] : zero;
}

const Integer& IntPoly::leading() const { return coeffs_.back(); }

std::map<unsigned, Integer> IntPoly::terms() const {
    std::map<unsigned, Integer> t;
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
        if (coeffs_[e] != 0) t.emplace(static_cast<unsigned>(e), coeffs_[e]);
    return t;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    IntPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Integer IntPoly::content() const {
    Integer g(0);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer c = content();
    return c == 1 ? *this : div_scalar_exact(c);
}

IntPoly IntPoly::mul_scalar(const Integer& c) const {
    if (c == 0) return {};
    IntPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

IntPoly IntPoly::div_scalar_exact(const Integer& c) const {
    IntPoly r = *this;
    for (auto& x : r.coeffs_)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b > -1). Only used by the gcd,
// which strips contents afterwards, so the scaling factor is irrelevant.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const Integer& lb = b.leading();
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int k = a.degree() - db;
        Integer la = a.leading();
        a = a.mul_scalar(lb) - b.mul_scalar(la) * IntPoly::monomial(static_cast<unsigned>(k));
    }
    return a;
}

} // namespace

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (a.is_zero()) return {};
        a = a.primitive_part();
        if (a.leading() < 0) a = -a;
        return a;
    }
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(std::move(a), b);
        a = std::move(b);
        b = r.primitive_part();
    }
    if (a.leading() < 0) a = -a;
    return a;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    auto q = divide_if_exact(d);
    if (!q) throw error("divexact: divisor does not divide exactly");
    return *q;
}

std::optional<IntPoly> IntPoly::divide_if_exact(const IntPoly& d) const {
    if (d.is_zero()) throw division_by_zero("polynomial division by zero");
    if (is_zero()) return IntPoly{};
    if (degree() < d.degree()) return std::nullopt;
    const Integer& ld = d.leading();
    std::vector<Integer> rem = coeffs_;
    std::vector<Integer> quot(static_cast<std::size_t>(degree() - d.degree()) + 1, Integer(0));
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Integer& lead = rem[static_cast<std::size_t>(k + d.degree())];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), ld.get_mpz_t())) return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), lead.get_mpz_t(), ld.get_mpz_t());
        for (int i = 0; i <= d.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * d.coeff(static_cast<std::size_t>(i));
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return from_coeffs(std::move(quot));
}

Rational IntPoly::eval(const Rational& q) const {
    Rational v(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        v *= q;
        v += Rational(coeffs_[i]);
    }
    v.canonicalize();
    return v;
}

IntPoly IntPoly::adams(unsigned m) const {
    if (is_zero() || m == 1) return *this;
    IntPoly r;
    r.coeffs_.assign(coeffs_.size() * m - (m - 1), Integer(0));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) r.coeffs_[e * m] = coeffs_[e];
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "L";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

unsigned euler_phi(unsigned d) {
    unsigned result = d;
    for (unsigned p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            result -= result / p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

const IntPoly& cyclotomic(unsigned d) {
    static std::unordered_map<unsigned, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    // Phi_k = (L^k - 1) / prod_{e | k, e < k} Phi_e, filled bottom-up so
    // every divisor is cached before it is needed.
    for (unsigned k = 1; k <= d; ++k) {
        if ((d % k != 0) || cache.contains(k)) continue;
        IntPoly num = IntPoly::monomial(k) - IntPoly::constant(1);
        for (unsigned e = 1; e < k; ++e)
            if (k % e == 0) num = num.divexact(cache.at(e));
        cache.emplace(k, std::move(num));
    }
    return cache.at(d);
}

// ---------------------------------------------------------------------------
// MClass
// ---------------------------------------------------------------------------

MClass::MClass(long v) : num_(IntPoly::constant(Integer(v))), den_(IntPoly::constant(1)) {}
MClass::MClass(Integer v) : num_(IntPoly::constant(std::move(v))), den_(IntPoly::constant(1)) {}

MClass MClass::lefschetz() { return MClass(IntPoly::monomial(1), IntPoly::constant(1)); }

MClass MClass::lefschetz_power(long e) {
    if (e >= 0) return MClass(IntPoly::monomial(static_cast<unsigned>(e)), IntPoly::constant(1));
    return MClass(IntPoly::constant(1), IntPoly::monomial(static_cast<unsigned>(-e)));
}

MClass MClass::from_poly(IntPoly p) { return MClass(std::move(p), IntPoly::constant(1)); }

MClass MClass::from_rational(const Rational& v) {
    return rational(Integer(v.get_num()), Integer(v.get_den()));
}

MClass MClass::rational(Integer num, Integer den) {
    return fraction(IntPoly::constant(std::move(num)), IntPoly::constant(std::move(den)));
}

MClass MClass::fraction(IntPoly num, IntPoly den) {
    if (den.is_zero()) throw division_by_zero("zero denominator in Q(L)");
    if (num.is_zero()) return MClass{};
    // Remove the common polynomial factor, then the common integer content,
    // then fix the sign of the denominator. The result is the unique normal
    // form with coprime primitive parts and coprime contents.
    if (den.degree() > 0 && num.degree() > 0) {
        IntPoly g = IntPoly::gcd(num, den);
        if (g.degree() > 0) {
            num = num.divexact(g);
            den = den.divexact(g);
        }
    }
    Integer cn = num.content(), cd = den.content(), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c > 1) {
        num = num.div_scalar_exact(c);
        den = den.div_scalar_exact(c);
    }
    if (den.leading() < 0) {
        num = -num;
        den = -den;
    }
    return MClass(std::move(num), std::move(den));
}

MClass operator+(const MClass& a, const MClass& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Knuth's trick: cancel the gcd of the denominators before cross
    // multiplying, which keeps the final normalization small.
    IntPoly g = IntPoly::gcd(a.den_, b.den_);
    if (g.is_one()) {
        return MClass::fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    IntPoly da = a.den_.divexact(g);
    IntPoly db = b.den_.divexact(g);
    return MClass::fraction(a.num_ * db + b.num_ * da, a.den_ * db);
}

MClass operator-(const MClass& a, const MClass& b) { return a + (-b); }

MClass operator*(const MClass& a, const MClass& b) {
    if (a.is_zero() || b.is_zero()) return MClass{};
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    // Cross-cancel before multiplying.
    IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
    IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
    IntPoly n1 = g1.is_one() ? a.num_ : a.num_.divexact(g1);
    IntPoly d2 = g1.is_one() ? b.den_ : b.den_.divexact(g1);
    IntPoly n2 = g2.is_one() ? b.num_ : b.num_.divexact(g2);
    IntPoly d1 = g2.is_one() ? a.den_ : a.den_.divexact(g2);
    return MClass::fraction(n1 * n2, d1 * d2);
}

MClass operator/(const MClass& a, const MClass& b) { return a * inv(b); }

MClass MClass::operator-() const {
    if (is_zero()) return *this;
    return MClass(-num_, den_);
}

MClass add(const MClass& a, const MClass& b) { return a + b; }
MClass mul(const MClass& a, const MClass& b) { return a * b; }
MClass neg(const MClass& a) { return -a; }

MClass inv(const MClass& a) {
    if (a.is_zero()) throw division_by_zero("inverse of zero in Q(L)");
    return MClass::fraction(a.den(), a.num());
}

MClass gl_class(unsigned n) {
    MClass r(1);
    IntPoly ln = IntPoly::monomial(n);
    for (unsigned i = 0; i < n; ++i)
        r = r * MClass::from_poly(ln - IntPoly::monomial(i));
    return r;
}

MClass adams(unsigned m, const MClass& a) {
    if (m == 0) throw contract_violation("adams: m must be >= 1");
    if (m == 1 || a.is_zero()) return a;
    // Coprimality and contents survive L -> L^m, so the substituted pair is
    // already canonical.
    return MClass::fraction(a.num().adams(m), a.den().adams(m));
}

Rational eval_at(const MClass& a, const Rational& q) {
    Rational d = a.den().eval(q);
    if (d == 0) throw pole_error("eval_at: pole at L = " + q.get_str());
    Rational v = a.num().eval(q) / d;
    v.canonicalize();
    return v;
}

bool in_localization(const MClass& a) {
    const IntPoly& den = a.den();
    if (den.is_one()) return true;
    if (den.content() != 1) return false;
    IntPoly f = den;
    // strip powers of L
    while (!f.is_zero() && f.coeff(0) == 0) f = f.divexact(IntPoly::monomial(1));
    // Strip cyclotomic factors Phi_d (each divides L^d - 1). phi(d) is not
    // monotone, but phi(d) >= sqrt(d/2), so Phi_d | f needs d <= 2 deg(f)^2.
    for (unsigned d = 1; f.degree() > 0; ++d) {
        const unsigned degf = static_cast<unsigned>(f.degree());
        if (d > 2 * degf * degf) return false;
        if (euler_phi(d) > degf) continue;
        const IntPoly& phi = cyclotomic(d);
        while (auto q = f.divide_if_exact(phi)) {
            f = std::move(*q);
            if (f.degree() <= 0) break;
        }
    }
    return f.is_one();
}

std::optional<std::map<long, Integer>> is_laurent_polynomial(const MClass& a) {
    const IntPoly& den = a.den();
    // canonical form, so a power of L appears exactly as the monomial L^k
    int k = den.degree();
    if (k < 0) return std::nullopt;
    if (den.leading() != 1) return std::nullopt;
    for (int i = 0; i < k; ++i)
        if (den.coeff(static_cast<std::size_t>(i)) != 0) return std::nullopt;
    std::map<long, Integer> out;
    for (const auto& [e, c] : a.num().terms()) out.emplace(static_cast<long>(e) - k, c);
    return out;
}

namespace {

// Try to present a denominator as L^a * prod (L^i - 1)^{e_i}; empty string
// when it has no such factorization.
std::string factored_denominator(const IntPoly& den) {
    if (den.is_one()) return "";
    IntPoly f = den;
    unsigned lpow = 0;
    while (!f.is_zero() && f.coeff(0) == 0) {
        f = f.divexact(IntPoly::monomial(1));
        ++lpow;
    }
    std::vector<std::pair<unsigned, unsigned>> factors; // (i, multiplicity)
    for (int i = f.degree(); i >= 1; --i) {
        IntPoly pi = IntPoly::monomial(static_cast<unsigned>(i)) - IntPoly::constant(1);
        unsigned mult = 0;
        while (auto q = f.divide_if_exact(pi)) {
            f = std::move(*q);
            ++mult;
            if (f.degree() < i) break;
        }
        if (mult > 0) factors.emplace_back(static_cast<unsigned>(i), mult);
    }
    if (!f.is_one()) return "";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << "*";
        first = false;
    };
    if (lpow > 0) {
        sep();
        os << "L";
        if (lpow > 1) os << "^" << lpow;
    }
    for (auto [i, mult] : factors) {
        sep();
        os << "(L";
        if (i > 1) os << "^" << i;
        os << "-1)";
        if (mult > 1) os << "^" << mult;
    }
    return os.str();
}

} // namespace

std::string to_string(const MClass& a, bool factored) {
    const IntPoly& num = a.num();
    const IntPoly& den = a.den();
    auto paren_num = [&]() {
        std::string s = num.str();
        return num.terms().size() > 1 ? "(" + s + ")" : s;
    };
    if (den.is_one()) return num.str();
    if (factored) {
        std::string fd = factored_denominator(den);
        if (!fd.empty()) {
            bool needs_parens = fd.find('*') != std::string::npos;
            return paren_num() + "/" + (needs_parens ? "(" + fd + ")" : fd);
        }
    }
    return paren_num() + "/(" + den.str() + ")";
}

} // namespace motivic
