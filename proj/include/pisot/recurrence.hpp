#pragma once

// Minimal-order integer linear recurrence fitting and exact evaluation.
// The solve runs over the first 2k terms with fraction-free elimination and
// the candidate must then fit the entire prefix, from index k onward.

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "pisot/bareiss.hpp"
#include "pisot/exact.hpp"
#include "pisot/sequence.hpp"

namespace pisot {

// b_n = sum_{i=1..k} A_i b_{n-i} for n >= k, with b_0..b_{k-1} given.
// Coefficients are integers; the characteristic polynomial is the monic
// integer polynomial t^k - sum A_i t^{k-i}.
struct LinearRecurrence {
    unsigned order_k = 0;
    std::vector<Int> coefficients;  // A_1..A_k, A_k != 0
    std::vector<Int> initial_terms; // b_0..b_{k-1}

    void validate() const {
        if (order_k == 0) throw std::invalid_argument("LinearRecurrence: order must be positive");
        if (coefficients.size() != order_k || initial_terms.size() != order_k)
            throw std::invalid_argument("LinearRecurrence: size mismatch");
        if (coefficients.back() == 0)
            throw std::invalid_argument("LinearRecurrence: A_k must be nonzero");
    }

    bool operator==(const LinearRecurrence& o) const = default;
};

// b_0..b_{count-1} by exact iteration.
inline std::vector<Int> eval_recurrence(const LinearRecurrence& rec, std::size_t count) {
    rec.validate();
    if (count < rec.order_k)
        throw std::invalid_argument("eval_recurrence: count below recurrence order");
    std::vector<Int> b(rec.initial_terms.begin(), rec.initial_terms.end());
    b.reserve(count);
    while (b.size() < count) {
        Int v(0);
        const std::size_t n = b.size();
        for (unsigned i = 1; i <= rec.order_k; ++i) v += rec.coefficients[i - 1] * b[n - i];
        b.push_back(v);
    }
    return b;
}

enum class GuessFailure {
    NotFound,                 // no order <= max_order fits the whole prefix
    NonIntegerCoefficients,   // a rational recurrence fits but is not integral
};

struct GuessOptions {
    bool allow_rational = false;  // accept exact-rational non-integer solutions
};

struct RationalRecurrence {
    unsigned order_k = 0;
    std::vector<Rat> coefficients;
    std::vector<Int> initial_terms;
};

using GuessResult = std::variant<LinearRecurrence, RationalRecurrence, GuessFailure>;

namespace detail {

inline bool fits_prefix(const std::vector<Rat>& coeffs, const std::vector<Int>& terms) {
    const std::size_t k = coeffs.size();
    for (std::size_t n = k; n < terms.size(); ++n) {
        Rat v(0);
        for (std::size_t i = 1; i <= k; ++i) v += coeffs[i - 1] * Rat(terms[n - i]);
        if (v != Rat(terms[n])) return false;
    }
    return true;
}

inline std::optional<std::vector<Rat>> solve_order(const std::vector<Int>& terms, unsigned k) {
    // Equations b_{k+row} = sum_i A_i b_{k+row-i}, row = 0..k-1.
    IntMatrix m(k, std::vector<Int>(k));
    std::vector<Int> rhs(k);
    for (unsigned row = 0; row < k; ++row) {
        for (unsigned i = 1; i <= k; ++i) m[row][i - 1] = terms[k + row - i];
        rhs[row] = terms[k + row];
    }
    return bareiss_solve(std::move(m), std::move(rhs));
}

}  // namespace detail

// Smallest k <= max_order whose unique exact solution fits the whole prefix.
// A singular system or a partial fit falls through to k+1. By default a
// fitting recurrence with non-integer rational coefficients is rejected
// (every recurrence in scope has integer coefficients); opt in via options.
// Orders needing more than the available data (2k terms to solve) are not
// tried, so a short prefix silently lowers the search ceiling.
inline GuessResult guess_recurrence(const std::vector<Int>& prefix, unsigned max_order,
                                    const GuessOptions& options = {}) {
    if (max_order == 0) throw std::invalid_argument("guess_recurrence: max_order must be positive");
    if (prefix.size() < 2)
        throw std::invalid_argument("guess_recurrence: insufficient prefix");
    const unsigned highest =
        std::min<unsigned>(max_order, static_cast<unsigned>(prefix.size() / 2));

    bool saw_rational_fit = false;
    for (unsigned k = 1; k <= highest; ++k) {
        auto sol = detail::solve_order(prefix, k);
        if (!sol) continue;
        if (!detail::fits_prefix(*sol, prefix)) continue;
        if ((*sol)[k - 1] == 0) continue;  // not genuinely order k

        bool integral = true;
        for (const Rat& c : *sol)
            if (c.get_den() != 1) { integral = false; break; }

        if (integral) {
            LinearRecurrence rec;
            rec.order_k = k;
            for (const Rat& c : *sol) rec.coefficients.emplace_back(c.get_num());
            rec.initial_terms.assign(prefix.begin(), prefix.begin() + k);
            rec.validate();
            return rec;
        }
        if (options.allow_rational) {
            RationalRecurrence rec;
            rec.order_k = k;
            rec.coefficients = *sol;
            rec.initial_terms.assign(prefix.begin(), prefix.begin() + k);
            return rec;
        }
        saw_rational_fit = true;  // keep scanning; an integral fit may exist higher up
    }
    return saw_rational_fit ? GuessFailure::NonIntegerCoefficients : GuessFailure::NotFound;
}

inline GuessResult guess_recurrence(const SequencePrefix& prefix, unsigned max_order,
                                    const GuessOptions& options = {}) {
    return guess_recurrence(prefix.terms, max_order, options);
}

}  // namespace pisot
