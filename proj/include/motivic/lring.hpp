#ifndef MOTIVIC_LRING_HPP
#define MOTIVIC_LRING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic {

using Integer  = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial in the Lefschetz symbol L with arbitrary-precision
/// integer coefficients. Stored densely by exponent; no trailing zeros, the
/// zero polynomial stores nothing.
class IntPoly {
public:
    IntPoly() = default; // zero
    static IntPoly constant(Integer c);
    static IntPoly monomial(unsigned exp, Integer c = Integer(1));
    static IntPoly from_coeffs(std::vector<Integer> coeffs); // index = exponent

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const Integer& coeff(std::size_t exp) const;
    const Integer& leading() const; // pre: nonzero
    /// Nonzero terms keyed by exponent, ascending.
    std::map<unsigned, Integer> terms() const;

    bool operator==(const IntPoly&) const = default;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;

    /// gcd of the coefficients, non-negative; 0 for the zero polynomial.
    Integer content() const;
    IntPoly primitive_part() const; // sign of leading coefficient preserved
    IntPoly mul_scalar(const Integer& c) const;
    IntPoly div_scalar_exact(const Integer& c) const; // pre: c divides every coefficient

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    static IntPoly gcd(IntPoly a, IntPoly b);
    /// Exact quotient; pre: d divides *this in Z[L].
    IntPoly divexact(const IntPoly& d) const;
    /// Quotient when d divides *this in Z[L], otherwise nullopt. Complete for
    /// monic d (Q-divisibility and Z-divisibility coincide there).
    std::optional<IntPoly> divide_if_exact(const IntPoly& d) const;

    Rational eval(const Rational& q) const;
    /// Substitution L -> L^m.
    IntPoly adams(unsigned m) const;

    /// Rendering like "L^4 - 2*L + 1"; "0" for the zero polynomial.
    std::string str() const;

private:
    std::vector<Integer> coeffs_; // coeffs_[e] = coefficient of L^e
    void trim();
};

/// The d-th cyclotomic polynomial (cached).
const IntPoly& cyclotomic(unsigned d);
unsigned euler_phi(unsigned d);

/// An element of Q(L) in canonical reduced form:
///   - the primitive parts of numerator and denominator are coprime over Q,
///   - the integer contents of numerator and denominator are coprime,
///   - the denominator has positive leading coefficient,
///   - zero is 0/1.
/// One normal form per field element, so equality is representation equality.
class MClass {
public:
    MClass() : num_(), den_(IntPoly::constant(1)) {} // zero
    MClass(long v);
    explicit MClass(Integer v);

    static MClass lefschetz();               // L
    static MClass lefschetz_power(long e);   // L^e, e may be negative
    static MClass from_poly(IntPoly p);
    static MClass from_rational(const Rational& v);
    static MClass rational(Integer num, Integer den);
    /// Canonicalizing constructor; throws division_by_zero when den = 0.
    static MClass fraction(IntPoly num, IntPoly den);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    bool operator==(const MClass&) const = default;

    friend MClass operator+(const MClass& a, const MClass& b);
    friend MClass operator-(const MClass& a, const MClass& b);
    friend MClass operator*(const MClass& a, const MClass& b);
    friend MClass operator/(const MClass& a, const MClass& b); // throws division_by_zero
    MClass operator-() const;
    MClass& operator+=(const MClass& b) { return *this = *this + b; }
    MClass& operator-=(const MClass& b) { return *this = *this - b; }
    MClass& operator*=(const MClass& b) { return *this = *this * b; }

private:
    MClass(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    IntPoly num_, den_;
};

MClass add(const MClass& a, const MClass& b);
MClass mul(const MClass& a, const MClass& b);
MClass neg(const MClass& a);
/// Multiplicative inverse; throws division_by_zero on zero input.
MClass inv(const MClass& a);

/// The class of GL_n: prod_{i=0}^{n-1} (L^n - L^i); 1 for n = 0.
MClass gl_class(unsigned n);

/// The m-th Adams operation, the ring endomorphism L -> L^m. Pre: m >= 1.
MClass adams(unsigned m, const MClass& a);

/// Exact evaluation at L = q; throws pole_error when the denominator
/// vanishes at q.
Rational eval_at(const MClass& a, const Rational& q);

/// Whether a lies in Z[L] localized at L and L^i - 1 (i >= 1), i.e. whether
/// the reduced denominator is, up to sign, a product of L and cyclotomic
/// polynomials with unit integer content.
bool in_localization(const MClass& a);

/// Laurent coefficients of a when its denominator is a power of L,
/// otherwise nullopt.
std::optional<std::map<long, Integer>> is_laurent_polynomial(const MClass& a);

/// Rendering such as "L + 1" or "(L^2 + L)/(L^2 - 1)". When factored is set
/// and the denominator is a product of a power of L and factors L^i - 1, it
/// is shown in that factored form.
std::string to_string(const MClass& a, bool factored = true);

} // namespace motivic

#endif
