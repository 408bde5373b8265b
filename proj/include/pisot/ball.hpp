#pragma once

// Complex ball arithmetic with exact rational midpoints and radii.
// Radius bookkeeping is always outward (upper bounds via rational sqrt
// brackets), so any true value contained in the inputs stays contained
// through +, -, *, / and integer powers.

#include <stdexcept>

#include "pisot/exact.hpp"

namespace pisot {

struct RatComplex {
    Rat re{0};
    Rat im{0};

    RatComplex() = default;
    RatComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit RatComplex(const Rat& r) : re(r), im(0) {}

    RatComplex operator+(const RatComplex& o) const { return {re + o.re, im + o.im}; }
    RatComplex operator-(const RatComplex& o) const { return {re - o.re, im - o.im}; }
    RatComplex operator*(const RatComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    RatComplex conj() const { return {re, Rat(-im)}; }
    Rat norm() const { return re * re + im * im; }  // |z|^2, exact

    // Exact division in Q(i).
    RatComplex operator/(const RatComplex& o) const {
        Rat n = o.norm();
        if (n == 0) throw std::domain_error("RatComplex: division by zero");
        RatComplex t = *this * o.conj();
        return {t.re / n, t.im / n};
    }

    bool operator==(const RatComplex& o) const = default;
};

inline Rat abs_upper(const RatComplex& z, unsigned bits = 64) { return sqrt_upper(z.norm(), bits); }
inline Rat abs_lower(const RatComplex& z, unsigned bits = 64) { return sqrt_lower(z.norm(), bits); }

struct ComplexBall {
    RatComplex center;
    Rat radius{0};

    ComplexBall() = default;
    ComplexBall(RatComplex c, Rat r) : center(std::move(c)), radius(std::move(r)) {
        if (radius < 0) throw std::invalid_argument("ComplexBall: negative radius");
    }
    explicit ComplexBall(const Rat& exact) : center(exact), radius(0) {}
    explicit ComplexBall(const Int& exact) : center(Rat(exact)), radius(0) {}

    bool contains(const RatComplex& v) const {
        RatComplex d = center - v;
        return d.norm() <= radius * radius;
    }
    bool contains(const Rat& v) const { return contains(RatComplex(v)); }
    bool contains(const Int& v) const { return contains(RatComplex(Rat(v))); }
    bool contains_zero() const { return contains(RatComplex()); }

    // Modulus interval of every point in the ball.
    Rat abs_upper_bound(unsigned bits = 64) const { return abs_upper(center, bits) + radius; }
    Rat abs_lower_bound(unsigned bits = 64) const {
        Rat lo = abs_lower(center, bits) - radius;
        return lo < 0 ? Rat(0) : lo;
    }

    ComplexBall operator+(const ComplexBall& o) const {
        return {center + o.center, radius + o.radius};
    }
    ComplexBall operator-(const ComplexBall& o) const {
        return {center - o.center, radius + o.radius};
    }
    ComplexBall operator-() const { return {RatComplex(Rat(-center.re), Rat(-center.im)), radius}; }

    ComplexBall operator*(const ComplexBall& o) const {
        // |xy - x0y0| <= |x0|r_y + |y0|r_x + r_x r_y
        Rat r = abs_upper(center) * o.radius + abs_upper(o.center) * radius + radius * o.radius;
        return {center * o.center, r};
    }

    ComplexBall operator/(const ComplexBall& o) const {
        // x/y - x0/y0 = (dx*y0 - x0*dy)/(y*y0); requires 0 outside o.
        Rat y0_lo = abs_lower(o.center);
        if (y0_lo <= o.radius) throw std::domain_error("ComplexBall: divisor ball touches zero");
        Rat y_lo = y0_lo - o.radius;
        Rat num = radius * abs_upper(o.center) + abs_upper(center) * o.radius;
        Rat r = num / (y_lo * y0_lo);
        return {center / o.center, r};
    }

    ComplexBall pow(unsigned long n) const {
        ComplexBall acc{RatComplex(Rat(1)), Rat(0)};
        ComplexBall base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return acc;
    }

    ComplexBall conj() const { return {center.conj(), radius}; }

    // True if the ball certifies a value with positive real lower bound etc.
    Rat real_lower() const { return center.re - radius; }
    Rat real_upper() const { return center.re + radius; }
};

}  // namespace pisot
