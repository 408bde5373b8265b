#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pisot/decision.hpp"
#include "pisot/serialize.hpp"

using namespace pisot;

namespace {

PisotParams classic(long x, long y) {
    PisotParams p;
    p.x = x;
    p.y = y;
    p.r = Rat(1, 2);
    return p;
}

std::vector<Int> ints(std::initializer_list<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

LinearRecurrence rec_of(std::initializer_list<long> coeffs, std::initializer_list<long> init) {
    LinearRecurrence rec{static_cast<unsigned>(coeffs.size()), ints(coeffs), ints(init)};
    rec.validate();
    return rec;
}

BinetData binet_for(const LinearRecurrence& rec, unsigned prec = 192) {
    CharPoly cp = characteristic_polynomial(rec);
    auto cert = certify_roots(cp, prec);
    REQUIRE(cert.status == RootStatus::Ok);
    auto bd = binet_coefficients(rec, cert.enclosures, prec);
    REQUIRE(bd.has_value());
    return *bd;
}

const LinearRecurrence kRec47 = rec_of({2, -1, 1}, {4, 7, 12});
const LinearRecurrence kRec517 = rec_of({4, -2}, {5, 17});
const LinearRecurrence kRec219 = rec_of({22, -3, 18, -11}, {10, 219, 4796, 105030});

// exact |c_n / b_{n-2}| <= K rho^n check for a range of n
void check_ratio_bound_validity(const LinearRecurrence& rec, const RatioBound& rb, long n_hi) {
    auto b = eval_recurrence(rec, n_hi + 1);
    for (long n = rb.n_min; n <= n_hi; ++n) {
        Int c = b[n - 1] * b[n - 1] - b[n] * b[n - 2];
        Rat lhs = rat_abs(Rat(c) / Rat(b[n - 2]));
        Rat rhs = rb.K * pow_upper(rb.rho, n, 256);
        CHECK(lhs <= rhs);
    }
}

}  // namespace

TEST_CASE("Binet coefficients: dominant constant of E(4,7)") {
    auto bd = binet_for(kRec47);
    const auto& c1 = bd.dominant_coefficient();
    Rat published(3902586801L, 1000000000L);
    CHECK(rat_abs(c1.center.re - published) <= Rat(1, 100000000) + c1.radius);
    CHECK(rat_abs(c1.center.im) <= c1.radius);
    CHECK(c1.real_lower() > 0);
}

TEST_CASE("Binet coefficients: order 1 is exact") {
    auto bd = binet_for(rec_of({2}, {1}));
    CHECK(bd.coefficients[0].center == RatComplex(Rat(1), Rat(0)));
    CHECK(bd.coefficients[0].radius == 0);
}

TEST_CASE("Binet coefficients: E(5,17) against the quadratic-formula oracle") {
    // roots 2 +/- sqrt(2); C_1 = (7 sqrt(2) + 10)/4, C_2 = (10 - 7 sqrt(2))/4
    auto bd = binet_for(kRec517);
    Rat s_lo = sqrt_lower(Rat(2), 140), s_hi = sqrt_upper(Rat(2), 140);
    const auto& c1 = bd.coefficients[0];
    const auto& c2 = bd.coefficients[1];
    CHECK(c1.center.re + c1.radius >= (7 * s_lo + 10) / 4);
    CHECK(c1.center.re - c1.radius <= (7 * s_hi + 10) / 4);
    CHECK(c2.center.re + c2.radius >= (10 - 7 * s_hi) / 4);
    CHECK(c2.center.re - c2.radius <= (10 - 7 * s_lo) / 4);
    // spot containment: sum C_i r_i^n must contain the exact integer b_n
    auto b = eval_recurrence(kRec517, 12);
    for (unsigned long n = 0; n < 12; ++n) {
        ComplexBall acc{RatComplex(), Rat(0)};
        for (std::size_t i = 0; i < bd.roots.size(); ++i)
            acc = acc + bd.coefficients[i] * bd.roots[i].ball().pow(n);
        CHECK(acc.contains(b[n]));
    }
}

TEST_CASE("discrepancy c_n = b_{n-1}^2 - b_n b_{n-2}") {
    CHECK(discrepancy(kRec47, 2) == 1);  // 7^2 - 12*4
    for (std::size_t n = 2; n < 8; ++n) CHECK(discrepancy(rec_of({2}, {1}), n) == 0);
    // oracle: exact evaluation of the recurrence fixture
    auto b = eval_recurrence(kRec219, 4);
    CHECK(discrepancy(kRec219, 3) == b[2] * b[2] - b[3] * b[1]);
    CHECK(discrepancy(kRec219, 3) == 46);
}

TEST_CASE("exact c_n lies inside the closed-form ball for n <= 50") {
    for (const auto& rec : {kRec47, kRec517, kRec219}) {
        auto bd = binet_for(rec, 256);
        for (unsigned long n = 2; n <= 50; ++n) {
            ComplexBall ball = discrepancy_ball(bd, n);
            CHECK(ball.contains(discrepancy(rec, n)));
        }
    }
}

TEST_CASE("ratio_bound for E(4,7) tracks the published decay rate") {
    auto bd = binet_for(kRec47);
    auto rb = ratio_bound(bd);
    REQUIRE(rb.has_value());
    CHECK(rb->rho < 1);
    CHECK(rb->rho > Rat(7548, 10000));  // >= |r_2| = 0.7548776664
    CHECK(rb->rho < Rat(756, 1000));
    CHECK(rb->K > 0);
    check_ratio_bound_validity(kRec47, *rb, 60);
}

TEST_CASE("ratio_bound for E(5,17): rho below 0.586") {
    auto bd = binet_for(kRec517);
    auto rb = ratio_bound(bd);
    REQUIRE(rb.has_value());
    CHECK(rb->rho < Rat(586, 1000));  // |r_2| = 2 - sqrt(2) ~ 0.5858
    check_ratio_bound_validity(kRec517, *rb, 60);
}

TEST_CASE("ratio_bound of an order-1 recurrence is identically zero") {
    auto bd = binet_for(rec_of({2}, {1}));
    auto rb = ratio_bound(bd);
    REQUIRE(rb.has_value());
    CHECK(rb->K == 0);
}

TEST_CASE("compute_N0 exact rational threshold search") {
    CHECK(compute_N0(Rat(0), Rat(1, 2), Rat(1, 2), 7) == 7);
    // 2*(1/2)^2 = 1/2 is not < 1/2; n = 3 gives 1/4
    CHECK(compute_N0(Rat(2), Rat(1, 2), Rat(1, 2), 0) == 3);
    CHECK(compute_N0(Rat(2), Rat(1, 2), Rat(1, 2), 5) == 5);
    // asymmetric r: target is min(r, 1-r)
    CHECK(compute_N0(Rat(1), Rat(1, 2), Rat(1, 8), 0) == 4);  // need < 1/8
    CHECK_THROWS_AS(compute_N0(Rat(1), Rat(3, 2), Rat(1, 2), 0), std::invalid_argument);
}

TEST_CASE("decide proves the E(4,7) recurrence") {
    auto rep = decide(classic(4, 7), kRec47);
    CHECK(rep.verdict == Verdict::Proved);
    CHECK(rep.spectrum.kind == SpectrumKind::DominantContracting);
    CHECK(rep.n0 >= 2);
    CHECK(rep.bound_rho < 1);
    CHECK(rep.bound_rho > 0);

    // soundness cross-check: independent exact regeneration far past N0
    long horizon = 3 * rep.n0 + 1000;
    auto a = generate(classic(4, 7), horizon);
    auto b = eval_recurrence(kRec47, horizon);
    CHECK(a.terms == b);
}

TEST_CASE("decide proves E(5,17) and the geometric E(1,2)") {
    auto rep = decide(classic(5, 17), kRec517);
    CHECK(rep.verdict == Verdict::Proved);

    auto repg = decide(classic(1, 2), rec_of({2}, {1}));
    CHECK(repg.verdict == Verdict::Proved);
    CHECK(repg.n0 == 2);  // c_n identically zero, nothing to check
}

TEST_CASE("decide disproves the E(10,219) doppelgaenger at term 1403") {
    auto rep = decide(classic(10, 219), kRec219, 2000);
    CHECK(rep.verdict == Verdict::Disproved);
    CHECK(rep.first_failure == 1403);
    CHECK(rep.spectrum.kind == SpectrumKind::SecondRootOutside);
    // advisory envelope estimate: crossing of the dominant diverging term
    CHECK(rep.predicted_breakdown == 1393);
    CHECK(rep.predicted_breakdown <= rep.first_failure);

    // confirmation oracle: recompute the first divergence independently
    auto a = generate(classic(10, 219), 1404);
    auto b = eval_recurrence(kRec219, 1404);
    long mismatch = -1;
    for (long i = 0; i < 1404; ++i)
        if (a.terms[i] != b[i]) { mismatch = i; break; }
    CHECK(mismatch == 1402);            // 0-based position
    CHECK(rep.first_failure == mismatch + 1);  // reported as 1-based ordinal
}

TEST_CASE("decide flags the (t-1)^2 arithmetic-progression case") {
    // E(3,4) = 3, 4, 5, 6, ... fits b_n = 2b_{n-1} - b_{n-2}
    auto rep = decide(classic(3, 4), rec_of({2, -1}, {3, 4}), 500);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(rep.spectrum.kind == SpectrumKind::UnitCircleSpecial);
    CHECK(rep.checked_up_to == 500);
    CHECK(rep.reason.find("unit-circle") != std::string::npos);
}

TEST_CASE("unit-modulus roots stay inconclusive with a telling reason") {
    // char poly (t^2+1)(t-2): roots +/-i exactly on the circle
    PisotParams p = classic(1, 3);  // a_2 = floor(9 + 1/2) = 9
    LinearRecurrence rec = rec_of({2, -1, 2}, {1, 3, 9});
    DecideOptions opts;
    opts.precision_cap = 1024;
    auto rep = decide(p, rec, 500, opts);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(rep.reason.find("unit-modulus") != std::string::npos);
}

TEST_CASE("repeated roots other than (t-1)^2 are unsupported") {
    // E(2,4): a_2 = floor(8.5) = 8 = 4*4 - 4*2, char poly (t-2)^2
    auto rep = decide(classic(2, 4), rec_of({4, -4}, {2, 4}), 500);
    CHECK(rep.verdict == Verdict::Unsupported);
}

TEST_CASE("an initial-terms mismatch is an immediate disproof") {
    auto rep = decide(classic(4, 7), rec_of({2}, {1}), 500);
    CHECK(rep.verdict == Verdict::Disproved);
    CHECK(rep.first_failure == 1);
}

TEST_CASE("a certified non-real dominant pair goes to the disprove scan") {
    // char poly t^2 - 2t + 2, roots 1 +/- i with modulus sqrt(2)
    auto rep = decide(classic(2, 3), rec_of({2, -2}, {2, 3}), 500);
    CHECK(rep.spectrum.kind == SpectrumKind::DominantUnfit);
    CHECK(rep.verdict == Verdict::Disproved);
    CHECK(rep.first_failure == 3);  // a_2 = 5, recurrence gives 2
}

TEST_CASE("an exhausted scan under a diverging second root is contradiction-suspect") {
    LinearRecurrence rec = rec_of({33, -2, 30, -11}, {30, 989, 32604, 1074844});
    auto rep = decide(classic(30, 989), rec, 1000);  // far below the true failure
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(rep.spectrum.kind == SpectrumKind::SecondRootOutside);
    CHECK(rep.checked_up_to == 1000);
    CHECK(rep.reason.find("contradiction-suspect") != std::string::npos);
}

TEST_CASE("decide rejects the limiting cases r = 0 and r = 1") {
    PisotParams p = classic(4, 7);
    p.r = Rat(0);
    CHECK_THROWS_AS(decide(p, kRec47), std::invalid_argument);
    p.r = Rat(1);
    CHECK_THROWS_AS(decide(p, kRec47), std::invalid_argument);
}

TEST_CASE("floor-bracket equivalence (property)") {
    // b_n = floor(b_{n-1}^2/b_{n-2} + r)  <=>  -r <= c_n/b_{n-2} < 1-r
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 1000; ++trial) {
        Int b0(static_cast<long>(rng() % 5000) + 1);
        Int b1(static_cast<long>(rng() % 5000) + 1);
        Rat r(static_cast<long>(rng() % 99) + 1, 100);
        Int floor_val = floor_div_plus(b1 * b1, b0, r);
        // perturb the candidate so both directions get exercised
        Int b2 = floor_val + static_cast<long>(rng() % 3) - 1;
        Rat ratio = Rat(b1 * b1 - b2 * b0) / Rat(b0);
        bool bracket = (-r <= ratio) && (ratio < 1 - r);
        CHECK(bracket == (b2 == floor_val));
    }
}

TEST_CASE("end_to_end mirrors the PtoRv pipeline") {
    auto r47 = end_to_end(classic(4, 7), 12);
    CHECK(r47.verdict == Verdict::Proved);
    REQUIRE(r47.recurrence);
    CHECK(r47.recurrence->coefficients == ints({2, -1, 1}));

    auto r517 = end_to_end(classic(5, 17), 12);
    CHECK(r517.verdict == Verdict::Proved);
    REQUIRE(r517.recurrence);
    CHECK(r517.recurrence->coefficients == ints({4, -2}));

    auto r12 = end_to_end(classic(1, 2), 12);
    CHECK(r12.verdict == Verdict::Proved);
    REQUIRE(r12.recurrence);
    CHECK(r12.recurrence->coefficients == ints({2}));

    auto r413 = end_to_end(classic(4, 13), 12);
    CHECK(r413.verdict == Verdict::Inconclusive);
    CHECK(r413.reason.find("no linear recurrence") != std::string::npos);
}

TEST_CASE("order-2 closure: an order-2 recurrence is proved outright") {
    PisotParams p;
    p.x = 1;
    p.y = 3;
    p.r = Rat(1, 2);
    p.order_s = 2;
    p.extra_initial_terms = {Int(7), Int(17)};
    auto rep = decide(p, rec_of({2, 1}, {1, 3}), 500);
    CHECK(rep.verdict == Verdict::Proved);
    CHECK(rep.n0 == 4);
}

TEST_CASE("order-2 engine with an order-3 recurrence is sound either way") {
    PisotParams p;
    p.x = 1;
    p.y = 2;
    p.r = Rat(1, 2);
    p.order_s = 2;
    p.extra_initial_terms = {Int(5), Int(16)};  // b_n = 7b_{n-1} - 10b_{n-2} + b_{n-3}
    LinearRecurrence rec = rec_of({7, -10, 1}, {1, 2, 5});
    auto rep = decide(p, rec, 400);
    if (rep.verdict == Verdict::Proved) {
        auto a = generate(p, rep.n0 + 300);
        auto b = eval_recurrence(rec, rep.n0 + 300);
        CHECK(a.terms == b);
    } else if (rep.verdict == Verdict::Disproved) {
        auto a = generate(p, rep.first_failure + 1);
        auto b = eval_recurrence(rec, rep.first_failure + 1);
        CHECK(a.terms[rep.first_failure - 1] != b[rep.first_failure - 1]);
        for (long i = 0; i < rep.first_failure - 1; ++i) CHECK(a.terms[i] == b[i]);
    } else {
        CHECK(rep.verdict == Verdict::Inconclusive);  // e.g. pivot domination unprovable
    }
}

TEST_CASE("reports are deterministic") {
    auto r1 = report_to_json(decide(classic(10, 219), kRec219, 1500)).dump();
    auto r2 = report_to_json(decide(classic(10, 219), kRec219, 1500)).dump();
    CHECK(r1 == r2);
}
