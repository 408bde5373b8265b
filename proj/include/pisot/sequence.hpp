#pragma once

// Exact generation of Pisot sequences E_r(x,y) and their order-s Hankel
// generalization. Terms are arbitrary-precision integers and every floor is
// computed through exact integer division; there is no floating-point path.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pisot/bareiss.hpp"
#include "pisot/exact.hpp"

namespace pisot {

// The triple (x, y, r) defining E_r(x,y), plus the order-s extension: an
// order-s sequence carries 2s initial terms (x, y and 2s-2 extras).
struct PisotParams {
    Int x;
    Int y;
    Rat r;               // exact rational in [0,1], lowest terms
    unsigned order_s = 1;
    std::vector<Int> extra_initial_terms;  // length 2s-2

    void validate() const {
        if (x <= 0 || y <= 0 || x >= y)
            throw std::invalid_argument("PisotParams: need 0 < x < y");
        if (r < 0 || r > 1)
            throw std::invalid_argument("PisotParams: need 0 <= r <= 1");
        if (order_s == 0)
            throw std::invalid_argument("PisotParams: order_s must be positive");
        if (extra_initial_terms.size() != 2 * order_s - 2)
            throw std::invalid_argument("PisotParams: order s needs exactly 2s initial terms");
        for (const Int& t : extra_initial_terms)
            if (t <= 0) throw std::invalid_argument("PisotParams: initial terms must be positive");
    }

    std::vector<Int> initial_terms() const {
        std::vector<Int> init{x, y};
        init.insert(init.end(), extra_initial_terms.begin(), extra_initial_terms.end());
        return init;
    }
};

enum class TruncatedReason {
    RequestedLengthReached,
    PivotVanished,
    TermNonPositive,  // outside the classic regime an order-s step can leave Z+
};

struct SequencePrefix {
    PisotParams params;
    std::vector<Int> terms;
    TruncatedReason truncated_reason = TruncatedReason::RequestedLengthReached;

    std::size_t size() const { return terms.size(); }
};

// a_n = floor(a_{n-1}^2 / a_{n-2} + r), the defining nonlinear recurrence.
inline Int next_term(const Int& a_prev2, const Int& a_prev1, const Rat& r) {
    if (a_prev2 <= 0) throw std::invalid_argument("next_term: a_prev2 must be positive");
    return floor_div_plus(a_prev1 * a_prev1, a_prev2, r);
}

namespace detail {

// Hankel matrix H[i][j] = window[i+j] for i,j in [0,s], with the unknown
// bottom-right entry replaced by `corner`.
inline IntMatrix hankel_matrix(const std::vector<Int>& window, unsigned s, const Int& corner) {
    IntMatrix h(s + 1, std::vector<Int>(s + 1));
    for (unsigned i = 0; i <= s; ++i)
        for (unsigned j = 0; j <= s; ++j)
            h[i][j] = (i + j == 2 * s) ? corner : window[i + j];
    return h;
}

}  // namespace detail

// F_s = cofactor of the unknown corner entry (the top-left s x s minor),
// G_s = -det(matrix with the corner zeroed), so Delta_s = a*F_s - G_s.
struct HankelStepResult {
    std::optional<Int> value;  // nullopt when the pivot F_s vanished
    Int f_s;
    Int g_s;
};

inline HankelStepResult hankel_step_full(const std::vector<Int>& window, unsigned s, const Rat& r) {
    if (window.size() != 2 * s)
        throw std::invalid_argument("hankel_step: window must have exactly 2s terms");
    IntMatrix minor(s, std::vector<Int>(s));
    for (unsigned i = 0; i < s; ++i)
        for (unsigned j = 0; j < s; ++j) minor[i][j] = window[i + j];
    Int f = bareiss_determinant(std::move(minor));
    Int g = -bareiss_determinant(detail::hankel_matrix(window, s, Int(0)));
    if (f == 0) return {std::nullopt, f, g};
    return {floor_div_plus(g, f, r), f, g};
}

inline std::optional<Int> hankel_step(const std::vector<Int>& window, unsigned s, const Rat& r) {
    return hankel_step_full(window, s, r).value;
}

// First `count` terms of E_r. For s=1 this is the plain nonlinear recurrence;
// for s>1 each term comes from the order-s Hankel step. A vanishing pivot
// truncates the prefix with the reason recorded.
inline SequencePrefix generate(const PisotParams& params, std::size_t count) {
    params.validate();
    const unsigned s = params.order_s;
    if (count < 2 * s)
        throw std::invalid_argument("generate: count must be at least 2s");

    SequencePrefix out;
    out.params = params;
    out.terms = params.initial_terms();

    if (s == 1) {
        while (out.terms.size() < count) {
            const std::size_t n = out.terms.size();
            out.terms.push_back(next_term(out.terms[n - 2], out.terms[n - 1], params.r));
        }
        return out;
    }

    std::vector<Int> window(out.terms.end() - 2 * s, out.terms.end());
    while (out.terms.size() < count) {
        auto step = hankel_step(window, s, params.r);
        if (!step) {
            out.truncated_reason = TruncatedReason::PivotVanished;
            return out;
        }
        if (*step <= 0) {
            out.truncated_reason = TruncatedReason::TermNonPositive;
            return out;
        }
        out.terms.push_back(*step);
        window.erase(window.begin());
        window.push_back(out.terms.back());
    }
    return out;
}

}  // namespace pisot
