#include "doctest.h"

#include "oracles.hpp"

#include "seqspace/report_io.hpp"
#include "seqspace/transforms.hpp"

using namespace seqspace;

namespace {

Rational q(const char* s) {
    return parse_scalar<Rational>(s);
}

OperatorSpec<Rational> make_spec(const char* alpha, const char* r, const char* s, LambdaPreset preset) {
    return {BinomialParams<Rational>(q(r), q(s)), order(q(alpha)), LambdaSeq<Rational>::preset(preset)};
}

using Window = SequenceWindow<Rational>;

} // namespace

TEST_CASE("apply: identity and composed on ones") {
    oracle::RationalGen gen(5);
    const Window x(gen.window(10));
    CHECK(apply(identity_triangle<Rational>(), x) == x);

    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    const auto y = apply(composed_triangle(spec), Window::ones(4));
    CHECK(y[0] == 1);
    CHECK(y[1] == q("3/8"));
}

TEST_CASE("apply is linear") {
    const auto spec = make_spec("-1/2", "2", "3", LambdaPreset::powers2);
    const auto a = composed_triangle(spec);
    oracle::RationalGen gen(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Window x(gen.window(12));
        const Window z(gen.window(12));
        const Rational ca = gen.next();
        const Rational cb = gen.next();
        std::vector<Rational> combo;
        for (std::size_t i = 0; i < 12; ++i) combo.push_back(ca * x[i] + cb * z[i]);
        const auto lhs = apply(a, Window(combo));
        const auto ax = apply(a, x);
        const auto az = apply(a, z);
        for (std::size_t i = 0; i < 12; ++i) CHECK(lhs[i] == ca * ax[i] + cb * az[i]);
    }
}

TEST_CASE("inverse_apply") {
    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    CHECK(inverse_apply(spec, Window::zeros(8)) == Window::zeros(8));

    const auto first_column = inverse_apply(spec, Window::unit(0, 8));
    const auto inv = invert_trunc(composed_triangle(spec), 8);
    for (std::size_t n = 0; n < 8; ++n) CHECK(first_column[n] == inv(n, 0));

    oracle::RationalGen gen(99);
    for (int trial = 0; trial < 10; ++trial) {
        const Window x(gen.window(16));
        CHECK(inverse_apply(spec, apply(composed_triangle(spec), x)) == x);
        CHECK(apply(composed_triangle(spec), inverse_apply(spec, x)) == x);
    }
    CHECK_THROWS_AS(inverse_apply(make_spec("1/2", "0", "2", LambdaPreset::cesaro), Window::ones(3)), DomainError);
}

TEST_CASE("theta basis") {
    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    const auto a = composed_triangle(spec);
    for (std::size_t k = 0; k < 10; ++k) CHECK(apply(a, theta_basis(spec, k, 10)) == Window::unit(k, 10));
    CHECK(theta_basis(spec, 0, 5)[0] == 1);

    const auto oracle_inv = invert_trunc(a, 4);
    const auto theta0 = theta_basis(spec, 0, 4);
    for (std::size_t n = 0; n < 4; ++n) CHECK(theta0[n] == oracle_inv(n, 0));

    const auto theta2 = theta_basis(spec, 2, 6);
    CHECK(theta2[0] == 0);
    CHECK(theta2[1] == 0);
    CHECK(theta2[2] != 0);
    CHECK_THROWS_AS(theta_basis(spec, 6, 6), DomainError);
}

TEST_CASE("eta sequence") {
    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    const auto eta = eta_sequence(spec, 16);
    CHECK(eta[0] == 1);
    CHECK(apply(composed_triangle(spec), eta) == Window::ones(16));

    // B = identity (r = 1, s = 0), alpha = 0: A collapses to diag(dlambda_k / lambda_k)
    const auto plain = make_spec("0", "1", "0", LambdaPreset::cesaro);
    const auto eta_plain = eta_sequence(plain, 6);
    for (std::size_t k = 0; k < 6; ++k) CHECK(eta_plain[k] == Rational(k + 1));
    CHECK(eta_plain[2] == 3);
    // the row-stochastic Lambda alone does map 1 to 1
    CHECK(apply(lambda_triangle(plain.lambda), Window::ones(6)) == Window::ones(6));
}

TEST_CASE("sigma coefficients") {
    const auto spec = make_spec("3/2", "2", "3", LambdaPreset::squares);
    for (std::size_t j = 0; j < 6; ++j) CHECK(sigma_coeffs(spec, theta_basis(spec, j, 8)) == Window::unit(j, 8));
    CHECK(sigma_coeffs(spec, Window::zeros(8)) == Window::zeros(8));
    CHECK(sigma_coeffs(spec, eta_sequence(spec, 8)) == Window::ones(8));
}

TEST_CASE("coefficients in the theta basis are unique") {
    const auto spec = make_spec("-1/2", "-1", "3", LambdaPreset::cesaro);
    const std::size_t n = 10;
    TruncatedMatrix<Rational> basis(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto col = theta_basis(spec, k, n);
        for (std::size_t i = 0; i < n; ++i) basis(i, k) = col[i];
    }
    const auto solver = invert_lower(basis);
    oracle::RationalGen gen(8);
    for (int trial = 0; trial < 5; ++trial) {
        const Window x(gen.window(n));
        const auto sigma = sigma_coeffs(spec, x);
        for (std::size_t k = 0; k < n; ++k) {
            Rational c(0);
            for (std::size_t i = 0; i <= k; ++i) c += solver(k, i) * x[i];
            CHECK(c == sigma[k]);
        }
    }
}

TEST_CASE("reconstruction residual") {
    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    const std::size_t n = 12;
    for (std::size_t j = 0; j < 5; ++j) {
        const auto theta = theta_basis(spec, j, n);
        for (std::size_t cut = j; cut < n; ++cut) CHECK(is_zero(reconstruction_residual(theta, cut, spec)));
        if (j > 0) CHECK(reconstruction_residual(theta, j - 1, spec) == 1);
    }

    std::vector<Rational> sigma;
    for (std::size_t m = 0; m < n; ++m) sigma.push_back(Rational(1, m + 1));
    const auto x = inverse_apply(spec, Window(sigma));
    for (std::size_t cut = 0; cut + 1 < n; ++cut) CHECK(reconstruction_residual(x, cut, spec) == Rational(1, cut + 2));
    CHECK(reconstruction_residual(x, n - 1, spec) == 0);
    CHECK_THROWS_AS(reconstruction_residual(x, n, spec), DomainError);
}

TEST_CASE("reconstruction residual is non-increasing in the cutoff") {
    const auto spec = make_spec("3/2", "2", "3", LambdaPreset::powers2);
    oracle::RationalGen gen(31);
    for (int trial = 0; trial < 5; ++trial) {
        const Window x(gen.window(24));
        Rational prev = reconstruction_residual(x, 0, spec);
        for (std::size_t cut = 1; cut < 24; ++cut) {
            const Rational cur = reconstruction_residual(x, cut, spec);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("bk norm") {
    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    for (std::size_t k = 0; k < 6; ++k) CHECK(bk_norm(theta_basis(spec, k, 8), spec) == 1);
    CHECK(bk_norm(Window::zeros(8), spec) == 0);
    CHECK(bk_norm(eta_sequence(spec, 8), spec) == 1);
}

TEST_CASE("membership diagnostics") {
    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    const std::size_t n = 12;

    const auto theta = membership_report(theta_basis(spec, 3, n), SequenceSpace::c0, spec);
    CHECK(theta.verdict == MembershipVerdict::consistent);
    CHECK(theta.tail_sup == 0);

    const auto eta = eta_sequence(spec, n);
    const auto eta_c = membership_report(eta, SequenceSpace::c, spec);
    CHECK(eta_c.verdict == MembershipVerdict::consistent);
    CHECK(eta_c.last_delta == 0);

    for (std::size_t len : {2u, 3u, 7u, 12u}) {
        const auto eta_c0 = membership_report(eta_sequence(spec, len), SequenceSpace::c0, spec);
        CHECK(eta_c0.verdict == MembershipVerdict::inconsistent);
        CHECK(eta_c0.tail_sup == 1);
    }

    // transform 1/(m+1): decays, settles, is bounded
    std::vector<Rational> harmonic;
    for (std::size_t m = 0; m < n; ++m) harmonic.push_back(Rational(1, m + 1));
    const auto x = inverse_apply(spec, Window(harmonic));
    CHECK(membership_report(x, SequenceSpace::c0, spec).verdict == MembershipVerdict::consistent);
    CHECK(membership_report(x, SequenceSpace::c, spec).verdict == MembershipVerdict::consistent);
    CHECK(membership_report(x, SequenceSpace::l_inf, spec).verdict == MembershipVerdict::consistent);

    // transform (-1)^m: bounded but oscillating
    std::vector<Rational> alternating;
    for (std::size_t m = 0; m < n; ++m) alternating.push_back(m % 2 == 0 ? Rational(1) : Rational(-1));
    const auto osc = inverse_apply(spec, Window(alternating));
    const auto osc_c = membership_report(osc, SequenceSpace::c, spec);
    CHECK(osc_c.verdict == MembershipVerdict::inconsistent);
    CHECK(osc_c.last_delta == 2);
    CHECK(membership_report(osc, SequenceSpace::l_inf, spec).verdict == MembershipVerdict::consistent);

    // transform m: grows; l_inf cannot be refuted on a window
    std::vector<Rational> ramp;
    for (std::size_t m = 0; m < n; ++m) ramp.push_back(Rational(m));
    const auto grow = inverse_apply(spec, Window(ramp));
    CHECK(membership_report(grow, SequenceSpace::l_inf, spec).verdict == MembershipVerdict::inconclusive);
}

TEST_CASE("l_p partial sums") {
    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    std::vector<Rational> harmonic;
    for (std::size_t m = 0; m < 4; ++m) harmonic.push_back(Rational(1, m + 1));
    const auto x = inverse_apply(spec, Window(harmonic));

    const auto r2 = membership_report<Rational>(x, SequenceSpace::l_p, spec, 2.0);
    REQUIRE(r2.partial_p_sum);
    CHECK(*r2.partial_p_sum == q("205/144"));
    CHECK(r2.verdict == MembershipVerdict::consistent);

    const auto bounded = membership_report<Rational>(x, SequenceSpace::l_p, spec, 1.0, q("2"));
    CHECK(*bounded.partial_p_sum == q("25/12"));
    CHECK(bounded.verdict == MembershipVerdict::inconsistent);
    CHECK(membership_report<Rational>(x, SequenceSpace::l_p, spec, 1.0, q("3")).verdict ==
          MembershipVerdict::consistent);

    CHECK_THROWS_AS(membership_report(x, SequenceSpace::l_p, spec), DomainError);
    CHECK_THROWS_AS(membership_report<Rational>(x, SequenceSpace::l_p, spec, 0.5), DomainError);

    const auto j = to_json(r2);
    CHECK(j.at("space") == "lp");
    CHECK(j.at("partial_p_sum") == "205/144");
    CHECK(j.at("verdict") == "consistent");
    CHECK_FALSE(to_json(membership_report(x, SequenceSpace::c0, spec)).contains("partial_p_sum"));
}

TEST_CASE("float backend round trip") {
    const OperatorSpec<double> spec{BinomialParams<double>(2.0, 3.0), order(0.5),
                                    LambdaSeq<double>::preset(LambdaPreset::squares)};
    std::vector<double> values;
    for (int i = 0; i < 16; ++i) values.push_back(0.25 * i - 1.5);
    const SequenceWindow<double> x(values);
    CHECK(approx_equal(inverse_apply(spec, apply(composed_triangle(spec), x)), x));
}

TEST_CASE("residual profile matches single cutoffs") {
    const auto spec = make_spec("-1/2", "2", "3", LambdaPreset::squares);
    oracle::RationalGen gen(12);
    const Window x(gen.window(10));
    const auto profile = reconstruction_residuals(x, spec);
    REQUIRE(profile.size() == 10);
    for (std::size_t cut = 0; cut < 10; ++cut) {
        Rational expect(0);
        const auto sigma = sigma_coeffs(spec, x);
        for (std::size_t m = cut + 1; m < 10; ++m) expect = std::max(expect, Rational(abs(sigma[m])));
        CHECK(profile[cut] == expect);
        CHECK(reconstruction_residual(x, cut, spec) == expect);
    }
}
