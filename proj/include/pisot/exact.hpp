#pragma once

// Exact arithmetic helpers on top of GMP: floor division with a rational
// offset, rigorous rational sqrt bounds, dyadic rounding, and directed
// rational powers. Everything here is exact; nothing touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pisot {

using Int = mpz_class;
using Rat = mpq_class;

// floor(a/b) for any signs, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor(num/den + r) for exact rational r = p/q, den != 0.
// Uses floor(num/den + p/q) = floor((q*num + p*den) / (q*den)).
inline Int floor_div_plus(const Int& num, const Int& den, const Rat& r) {
    const Int& p = r.get_num();
    const Int& q = r.get_den();
    return floor_div(q * num + p * den, q * den);
}

// floor(sqrt(n)), n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

inline Int pow2(unsigned long e) {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
    return v;
}

// Lower/upper rational bounds for sqrt(q), q >= 0, with ~extra_bits of
// slack beyond the integer part: sqrt(a/b) = sqrt(a*b)/b, bracketed by
// isqrt of the scaled radicand.
inline Rat sqrt_lower(const Rat& q, unsigned extra_bits = 64) {
    if (q < 0) throw std::domain_error("sqrt_lower of negative value");
    if (q == 0) return Rat(0);
    Int t = q.get_num() * q.get_den();
    Int scale = pow2(extra_bits);
    Int s = isqrt(t * scale * scale);
    Rat out(s, q.get_den() * scale);
    out.canonicalize();
    return out;
}

inline Rat sqrt_upper(const Rat& q, unsigned extra_bits = 64) {
    if (q < 0) throw std::domain_error("sqrt_upper of negative value");
    if (q == 0) return Rat(0);
    Int t = q.get_num() * q.get_den();
    Int scale = pow2(extra_bits);
    Int s = isqrt(t * scale * scale) + 1;
    Rat out(s, q.get_den() * scale);
    out.canonicalize();
    return out;
}

// Round q to a dyadic rational m/2^bits, directed. Dyadic values keep the
// N0 search and power bounds cheap even at five-digit exponents.
inline Rat dyadic_round_up(const Rat& q, unsigned bits) {
    Int scale = pow2(bits);
    Int m;
    mpz_cdiv_q(m.get_mpz_t(), Int(q.get_num() * scale).get_mpz_t(), q.get_den().get_mpz_t());
    Rat out(m, scale);
    out.canonicalize();
    return out;
}

inline Rat dyadic_round_down(const Rat& q, unsigned bits) {
    Int scale = pow2(bits);
    Int m;
    mpz_fdiv_q(m.get_mpz_t(), Int(q.get_num() * scale).get_mpz_t(), q.get_den().get_mpz_t());
    Rat out(m, scale);
    out.canonicalize();
    return out;
}

// Directed powers: pow_upper(q,n) >= q^n >= pow_lower(q,n) for q >= 0.
// Binary exponentiation with dyadic rounding after each multiply so the
// operands stay near `bits` significant bits.
inline Rat pow_upper(const Rat& q, unsigned long n, unsigned bits = 96) {
    if (q < 0) throw std::domain_error("pow_upper of negative base");
    Rat acc(1), base = q;
    while (n > 0) {
        if (n & 1) acc = dyadic_round_up(acc * base, bits);
        n >>= 1;
        if (n > 0) base = dyadic_round_up(base * base, bits);
    }
    return acc;
}

inline Rat pow_lower(const Rat& q, unsigned long n, unsigned bits = 96) {
    if (q < 0) throw std::domain_error("pow_lower of negative base");
    Rat acc(1), base = q;
    while (n > 0) {
        if (n & 1) acc = dyadic_round_down(acc * base, bits);
        n >>= 1;
        if (n > 0) base = dyadic_round_down(base * base, bits);
    }
    return acc;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Parse "p/q" or "p" into an exact rational.
inline Rat parse_rational(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

// Exact decimal string for a dyadic rational m/2^e (finite expansion).
// Throws if the denominator is not a power of two.
inline std::string dyadic_decimal_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    Int den = c.get_den();
    unsigned long e = 0;
    Int d = den;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++e;
    }
    if (d != 1) throw std::domain_error("not a dyadic rational");
    Int num = c.get_num();
    bool neg = num < 0;
    if (neg) num = -num;
    Int five;
    mpz_ui_pow_ui(five.get_mpz_t(), 5, e);
    Int scaled = num * five;  // q = scaled / 10^e
    std::string digits = scaled.get_str();
    std::string out;
    if (e == 0) {
        out = digits;
    } else {
        if (digits.size() <= e) digits = std::string(e + 1 - digits.size(), '0') + digits;
        out = digits.substr(0, digits.size() - e) + "." + digits.substr(digits.size() - e);
    }
    return neg ? "-" + out : out;
}

}  // namespace pisot
