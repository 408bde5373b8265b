#pragma once

// Certified root enclosures for monic integer polynomials and spectrum
// classification against the unit circle.
//
// Approximation is floating point (GMP mpf, Aberth-Ehrlich); certification
// is exact. For each approximation z the disk of radius k*|p(z)/p'(z)|
// around z contains at least one root (from p'/p = sum 1/(z - r_j)); if the
// k disks are pairwise disjoint each holds exactly one root of the
// square-free polynomial. The radius test uses exact rational evaluation of
// p and p' at the dyadic point z, so the certificate does not depend on the
// quality of the iteration.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pisot/ball.hpp"
#include "pisot/exact.hpp"
#include "pisot/recurrence.hpp"

namespace pisot {

namespace poly {

// Polynomials as ascending integer coefficient vectors, c[i] * t^i.
using ZPoly = std::vector<Int>;

inline int degree(const ZPoly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
}

inline ZPoly derivative(const ZPoly& p) {
    ZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Int(i) * p[i]);
    if (d.empty()) d.push_back(Int(0));
    return d;
}

inline Int content(const ZPoly& p) {
    Int g(0);
    for (const Int& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline ZPoly primitive_part(ZPoly p) {
    Int g = content(p);
    if (g == 0 || g == 1) return p;
    for (Int& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0, b != 0).
inline ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    int da = degree(a), db = degree(b);
    const Int& lb = b[db];
    while (da >= db) {
        Int lead = a[da];
        for (int i = 0; i <= da; ++i) a[i] *= lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= lead * b[i];
        a.resize(da);  // top coefficient cancelled
        if (a.empty()) a.push_back(Int(0));
        da = degree(a);
    }
    return a;
}

// Primitive gcd over Z (pseudo-remainder sequence with content removal).
inline ZPoly gcd_z(ZPoly a, ZPoly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (degree(a) < degree(b)) std::swap(a, b);
    while (degree(b) >= 0 && !(degree(b) == 0 && b[0] == 0)) {
        ZPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
        if (degree(b) < 0 || (degree(b) == 0 && b[0] == 0)) break;
    }
    a = primitive_part(std::move(a));
    if (degree(a) >= 0 && a[degree(a)] < 0)
        for (Int& c : a) c = -c;
    return a;
}

inline ZPoly reversed(const ZPoly& p) {
    ZPoly r(p.rbegin(), p.rend());
    return r;
}

inline RatComplex eval_exact(const ZPoly& p, const RatComplex& z) {
    RatComplex acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + RatComplex(Rat(p[i]));
    return acc;
}

inline ComplexBall eval_ball(const ZPoly& p, const ComplexBall& z) {
    ComplexBall acc{RatComplex(), Rat(0)};
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + ComplexBall(Rat(p[i]));
    return acc;
}

}  // namespace poly

// Monic integer characteristic polynomial with its square-freeness status.
struct CharPoly {
    poly::ZPoly coeffs;             // ascending, coeffs.back() == 1
    bool square_free = false;
    poly::ZPoly gcd_with_derivative;

    explicit CharPoly(poly::ZPoly c) : coeffs(std::move(c)) {
        if (poly::degree(coeffs) < 1)
            throw std::invalid_argument("CharPoly: degree must be >= 1");
        if (coeffs.back() != 1)
            throw std::invalid_argument("CharPoly: polynomial must be monic");
        gcd_with_derivative = poly::gcd_z(coeffs, poly::derivative(coeffs));
        square_free = poly::degree(gcd_with_derivative) == 0;
    }

    unsigned degree() const { return static_cast<unsigned>(poly::degree(coeffs)); }

    bool is_t_minus_1_squared() const {
        return coeffs.size() == 3 && coeffs[0] == 1 && coeffs[1] == -2 && coeffs[2] == 1;
    }

    // Nontrivial gcd with the reversed polynomial flags reciprocal root
    // pairs, in particular roots exactly on the unit circle.
    bool has_reciprocal_factor() const {
        poly::ZPoly g = poly::gcd_z(coeffs, poly::reversed(coeffs));
        return poly::degree(g) >= 1;
    }
};

// t^k - sum A_i t^{k-i} for a recurrence's coefficients.
inline CharPoly characteristic_polynomial(const LinearRecurrence& rec) {
    poly::ZPoly c(rec.order_k + 1);
    c[rec.order_k] = 1;
    for (unsigned i = 1; i <= rec.order_k; ++i) c[rec.order_k - i] = -rec.coefficients[i - 1];
    return CharPoly(std::move(c));
}

// Certified disk around one root: dyadic center, dyadic radius. A real root
// has no conjugate partner (conjugate_pair empty and imaginary part zero).
struct RootEnclosure {
    RatComplex center;  // dyadic real/imaginary parts
    Rat radius;         // dyadic, >= 0
    std::optional<unsigned> conjugate_pair;  // index of the mirrored enclosure

    bool is_real() const { return !conjugate_pair.has_value(); }

    // Real-axis interval of the disk (meaningful for certified-real roots).
    Rat real_lower() const { return center.re - radius; }
    Rat real_upper() const { return center.re + radius; }

    Rat modulus_upper(unsigned bits = 128) const { return abs_upper(center, bits) + radius; }
    Rat modulus_lower(unsigned bits = 128) const {
        Rat lo = abs_lower(center, bits) - radius;
        return lo < 0 ? Rat(0) : lo;
    }

    ComplexBall ball() const { return {center, radius}; }
};

enum class RootStatus { Ok, RepeatedRoots, PrecisionExhausted };

struct RootCertification {
    RootStatus status = RootStatus::Ok;
    std::vector<RootEnclosure> enclosures;  // sorted by decreasing modulus upper bound
    poly::ZPoly gcd;                        // set when status == RepeatedRoots
};

namespace detail {

struct MpfComplex {
    mpf_class re, im;
    MpfComplex(unsigned prec) : re(0, prec), im(0, prec) {}
    MpfComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
};

inline MpfComplex operator+(const MpfComplex& a, const MpfComplex& b) {
    return {mpf_class(a.re + b.re), mpf_class(a.im + b.im)};
}
inline MpfComplex operator-(const MpfComplex& a, const MpfComplex& b) {
    return {mpf_class(a.re - b.re), mpf_class(a.im - b.im)};
}
inline MpfComplex operator*(const MpfComplex& a, const MpfComplex& b) {
    return {mpf_class(a.re * b.re - a.im * b.im), mpf_class(a.re * b.im + a.im * b.re)};
}
inline MpfComplex operator/(const MpfComplex& a, const MpfComplex& b) {
    mpf_class n(b.re * b.re + b.im * b.im);
    return {mpf_class((a.re * b.re + a.im * b.im) / n), mpf_class((a.im * b.re - a.re * b.im) / n)};
}
inline mpf_class norm(const MpfComplex& a) { return mpf_class(a.re * a.re + a.im * a.im); }

// Aberth-Ehrlich simultaneous iteration at the given precision. Returns
// nullopt if the iteration fails to settle.
inline std::optional<std::vector<MpfComplex>> aberth(const poly::ZPoly& p, unsigned prec) {
    const int k = poly::degree(p);
    poly::ZPoly dp = poly::derivative(p);

    // Cauchy bound max(1, sum |a_i| / |a_k|) for the starting circle.
    double bound = 0.0;
    for (int i = 0; i < k; ++i) {
        double v = std::fabs(mpz_get_d(p[i].get_mpz_t()));
        bound += v;
    }
    bound = std::max(1.0, bound);

    std::vector<MpfComplex> z;
    z.reserve(k);
    for (int j = 0; j < k; ++j) {
        double angle = 2.0 * M_PI * j / k + 0.31;
        mpf_class re(bound * std::cos(angle), prec), im(bound * std::sin(angle), prec);
        z.emplace_back(std::move(re), std::move(im));
    }

    mpf_class eps(1, prec);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec > 24 ? prec - 8 : 16);
    mpf_class eps2(eps * eps);

    auto eval = [&](const poly::ZPoly& q, const MpfComplex& x) {
        MpfComplex acc(prec);
        for (std::size_t i = q.size(); i-- > 0;) {
            acc = acc * x;
            acc.re += mpf_class(q[i], prec);
        }
        return acc;
    };

    const int max_iter = 2000;
    for (int it = 0; it < max_iter; ++it) {
        bool done = true;
        for (int i = 0; i < k; ++i) {
            MpfComplex pv = eval(p, z[i]);
            MpfComplex dv = eval(dp, z[i]);
            if (norm(dv) == 0) return std::nullopt;
            MpfComplex w = pv / dv;
            MpfComplex sum(prec);
            for (int j = 0; j < k; ++j) {
                if (j == i) continue;
                MpfComplex diff = z[i] - z[j];
                if (norm(diff) == 0) return std::nullopt;
                MpfComplex one(mpf_class(1, prec), mpf_class(0, prec));
                sum = sum + one / diff;
            }
            MpfComplex denom(mpf_class(1, prec) - mpf_class(w.re * sum.re - w.im * sum.im),
                             mpf_class(-(w.re * sum.im + w.im * sum.re)));
            if (norm(denom) == 0) return std::nullopt;
            MpfComplex corr = w / denom;
            z[i] = z[i] - corr;
            mpf_class scale(1 + norm(z[i]));
            if (norm(corr) > eps2 * scale) done = false;
        }
        if (done) return z;
    }
    return std::nullopt;
}

inline Rat mpf_to_rat(const mpf_class& x) {
    mpq_class q;
    mpq_set_f(q.get_mpq_t(), x.get_mpf_t());
    return q;
}

inline bool disks_intersect(const RatComplex& c1, const Rat& r1, const RatComplex& c2,
                            const Rat& r2) {
    RatComplex d = c1 - c2;
    Rat s = r1 + r2;
    return d.norm() <= s * s;
}

}  // namespace detail

// Certified pairwise-disjoint enclosures of all roots, sorted by decreasing
// modulus upper bound. Requires square-free input (checked exactly).
inline RootCertification certify_roots(const CharPoly& p, unsigned precision_bits) {
    RootCertification out;
    if (!p.square_free) {
        out.status = RootStatus::RepeatedRoots;
        out.gcd = p.gcd_with_derivative;
        return out;
    }
    const unsigned k = p.degree();

    if (k == 1) {
        // Monic linear: the root is exactly -c0.
        RootEnclosure e;
        e.center = RatComplex(Rat(-p.coeffs[0]), Rat(0));
        e.radius = 0;
        out.enclosures.push_back(std::move(e));
        return out;
    }

    auto approx = detail::aberth(p.coeffs, precision_bits);
    if (!approx) {
        out.status = RootStatus::PrecisionExhausted;
        return out;
    }

    poly::ZPoly dp = poly::derivative(p.coeffs);
    std::vector<RootEnclosure> encl(k);
    for (unsigned i = 0; i < k; ++i) {
        RatComplex z(detail::mpf_to_rat((*approx)[i].re), detail::mpf_to_rat((*approx)[i].im));
        RatComplex pv = poly::eval_exact(p.coeffs, z);
        encl[i].center = z;
        if (pv == RatComplex()) {
            encl[i].radius = 0;
            continue;
        }
        RatComplex dv = poly::eval_exact(dp, z);
        if (dv == RatComplex()) {
            out.status = RootStatus::PrecisionExhausted;
            return out;
        }
        // min_j |z - r_j| <= k |p(z)/p'(z)|, rounded up to a dyadic radius.
        Rat bound = Rat(k) * abs_upper(pv, precision_bits) / abs_lower(dv, precision_bits);
        encl[i].radius = dyadic_round_up(bound, precision_bits);
    }

    // Raw disjointness certificate: k disjoint disks, each holding at least
    // one of the k roots, means each holds exactly one. The realness and
    // pairing deductions below need that bijection.
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j)
            if (detail::disks_intersect(encl[i].center, encl[i].radius, encl[j].center,
                                        encl[j].radius)) {
                out.status = RootStatus::PrecisionExhausted;
                return out;
            }

    // Conjugate pairing: each disk whose mirror meets no other disk holds a
    // real root; a disk whose mirror meets exactly one partner is mirrored
    // onto it exactly (the conjugate root set is symmetric).
    std::vector<int> partner(k, -1);
    for (unsigned i = 0; i < k; ++i) {
        RatComplex cc = encl[i].center.conj();
        std::vector<unsigned> hits;
        for (unsigned j = 0; j < k; ++j) {
            if (j == i) continue;
            if (detail::disks_intersect(cc, encl[i].radius, encl[j].center, encl[j].radius))
                hits.push_back(j);
        }
        if (hits.size() > 1) {
            out.status = RootStatus::PrecisionExhausted;
            return out;
        }
        partner[i] = hits.empty() ? static_cast<int>(i) : static_cast<int>(hits[0]);
    }
    for (unsigned i = 0; i < k; ++i) {
        if (partner[i] == static_cast<int>(i)) {
            encl[i].center.im = 0;  // certified real; projection keeps containment
            encl[i].conjugate_pair.reset();
        } else {
            unsigned j = partner[i];
            if (partner[j] != static_cast<int>(i)) {
                out.status = RootStatus::PrecisionExhausted;
                return out;
            }
            if (i < j) {  // mirror the second disk of the pair exactly
                encl[j].center = encl[i].center.conj();
                encl[j].radius = encl[i].radius;
            }
            encl[i].conjugate_pair = j;
        }
    }

    // Final disjointness certificate on the adjusted disks.
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j) {
            RatComplex d = encl[i].center - encl[j].center;
            Rat s = encl[i].radius + encl[j].radius;
            if (d.norm() <= s * s) {
                out.status = RootStatus::PrecisionExhausted;
                return out;
            }
        }

    // Sort by decreasing modulus upper bound; deterministic tie-break.
    std::vector<unsigned> order(k);
    for (unsigned i = 0; i < k; ++i) order[i] = i;
    std::vector<Rat> ub(k);
    for (unsigned i = 0; i < k; ++i) ub[i] = encl[i].modulus_upper();
    std::sort(order.begin(), order.end(), [&](unsigned a, unsigned b) {
        if (ub[a] != ub[b]) return ub[a] > ub[b];
        if (encl[a].center.im != encl[b].center.im) return encl[a].center.im > encl[b].center.im;
        return encl[a].center.re < encl[b].center.re;
    });
    std::vector<unsigned> pos(k);
    for (unsigned i = 0; i < k; ++i) pos[order[i]] = i;
    out.enclosures.resize(k);
    for (unsigned i = 0; i < k; ++i) {
        out.enclosures[i] = encl[order[i]];
        if (out.enclosures[i].conjugate_pair)
            out.enclosures[i].conjugate_pair = pos[*out.enclosures[i].conjugate_pair];
    }
    return out;
}

enum class SpectrumKind {
    DominantContracting,  // for order s: the (s+1)-st largest modulus is certified < 1
    SecondRootOutside,    // some non-dominant root certified outside the unit circle
    UnitCircleSpecial,    // the (t-1)^2 case, recognized upstream
    DominantUnfit,        // dominant root certified non-real or not > 1 (s = 1)
    Ambiguous,            // some modulus interval straddles 1 at this precision
};

struct SpectrumClass {
    SpectrumKind kind = SpectrumKind::Ambiguous;
    std::optional<RootEnclosure> dominant;
    Rat second_modulus_lower{0};
    Rat second_modulus_upper{0};
    std::vector<unsigned> straddling;  // indices whose modulus interval contains 1
};

// Classify certified, sorted enclosures against the unit circle. For s = 1
// this is the Flor-Boyd filter; for s > 1 only the (s+1)-st largest modulus
// matters.
inline SpectrumClass classify_spectrum(const std::vector<RootEnclosure>& enclosures, unsigned s) {
    if (enclosures.empty()) throw std::invalid_argument("classify_spectrum: no enclosures");
    SpectrumClass out;
    out.dominant = enclosures[0];
    const std::size_t k = enclosures.size();

    std::vector<Rat> lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
        lo[i] = enclosures[i].modulus_lower();
        hi[i] = enclosures[i].modulus_upper();
        if (lo[i] <= 1 && hi[i] >= 1) out.straddling.push_back(static_cast<unsigned>(i));
    }
    if (k > s) {
        out.second_modulus_lower = dyadic_round_down(lo[s], 96);
        out.second_modulus_upper = dyadic_round_up(hi[s], 96);
    }

    if (s == 1) {
        const RootEnclosure& dom = enclosures[0];
        bool dom_ok = dom.is_real() && dom.real_lower() > 1;
        if (!dom_ok) {
            if (lo[0] <= 1 && hi[0] >= 1) {
                // cannot yet tell whether the largest modulus exceeds 1
                out.kind = SpectrumKind::Ambiguous;
            } else {
                // certified: dominant root is complex, negative, or not
                // outside the circle, so the Flor-Boyd shape is violated
                out.kind = SpectrumKind::DominantUnfit;
            }
            return out;
        }
        bool any_outside = false, any_straddle = false;
        for (std::size_t i = 1; i < k; ++i) {
            if (lo[i] > 1) any_outside = true;
            else if (hi[i] >= 1) any_straddle = true;
        }
        if (any_outside) out.kind = SpectrumKind::SecondRootOutside;
        else if (any_straddle) out.kind = SpectrumKind::Ambiguous;
        else out.kind = SpectrumKind::DominantContracting;
        return out;
    }

    // Order s > 1: necessary condition is |r_{s+1}| < 1.
    if (k <= s) {
        out.kind = SpectrumKind::DominantContracting;  // vacuous, fewer than s+1 roots
        return out;
    }
    if (hi[s] < 1) out.kind = SpectrumKind::DominantContracting;
    else if (lo[s] > 1) out.kind = SpectrumKind::SecondRootOutside;
    else out.kind = SpectrumKind::Ambiguous;
    return out;
}

}  // namespace pisot
