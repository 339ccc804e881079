#include "doctest.h"

#include "oracles.hpp"

#include "seqspace/operators.hpp"
#include "seqspace/triangle.hpp"

#include <vector>

using namespace seqspace;

namespace {

Rational q(const char* s) {
    return parse_scalar<Rational>(s);
}

OperatorSpec<Rational> make_spec(const char* alpha, const char* r, const char* s, LambdaPreset preset) {
    return {BinomialParams<Rational>(q(r), q(s)), order(q(alpha)), LambdaSeq<Rational>::preset(preset)};
}

oracle::Dense to_dense(const TruncatedMatrix<Rational>& m) {
    oracle::Dense d = oracle::zeros(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) d[i][j] = m(i, j);
    return d;
}

bool equals_dense(const TruncatedMatrix<Rational>& m, const oracle::Dense& d) {
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            if (m(i, j) != d[i][j]) return false;
    return true;
}

std::vector<Rational> lambda_values(const LambdaSeq<Rational>& l, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(l[k]);
    return v;
}

} // namespace

TEST_CASE("triangle basics") {
    const auto id = identity_triangle<Rational>();
    CHECK(id(3, 3) == 1);
    CHECK(id(3, 1) == 0);
    CHECK(id(1, 3) == 0);
    const auto m = id.truncate(5);
    CHECK(m == TruncatedMatrix<Rational>::identity(5));
    CHECK(m.is_lower_triangular());
    CHECK(invert_trunc(id, 7) == TruncatedMatrix<Rational>::identity(7));
    CHECK_THROWS_AS(compose_trunc(id, id, 0), SizeError);
}

TEST_CASE("compose with identity is truncation") {
    const auto d = delta_triangle(order(q("3/7")));
    CHECK(compose_trunc(d, identity_triangle<Rational>(), 9) == d.truncate(9));
}

TEST_CASE("invert_trunc reports the singular index") {
    const Triangle<Rational> t("singular-at-2", [](std::size_t n, std::size_t k) {
        return n == k ? Rational(n == 2 ? 0 : 1) : Rational(1);
    });
    try {
        (void)invert_trunc(t, 5);
        FAIL("expected SingularError");
    } catch (const SingularError& e) {
        CHECK(e.index() == 2);
    }
    CHECK_NOTHROW(invert_trunc(t, 2));
}

TEST_CASE("delta triangle") {
    const auto half = delta_triangle(order(q("1/2")));
    for (std::size_t n = 0; n < 10; ++n) CHECK(half(n, n) == 1);
    CHECK(half(1, 0) == q("-1/2"));
    CHECK(half(2, 0) == q("-1/8"));

    const auto two = delta_triangle(order(q("2")));
    CHECK(two(2, 0) == 1);
    CHECK(two(2, 1) == -2);
    CHECK(two(2, 2) == 1);
}

TEST_CASE("delta reduces to the integer-order difference triangle") {
    for (long m = 1; m <= 3; ++m) {
        const auto t = delta_triangle(order(Rational(m))).truncate(16);
        for (std::size_t n = 0; n < 16; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                const long j = static_cast<long>(n - k);
                const Rational expected = (j % 2 == 0 ? 1 : -1) * oracle::factorial_binomial(m, j);
                CHECK(t(n, k) == expected);
            }
        }
    }
}

TEST_CASE("delta inverse") {
    const auto inv = delta_inv_triangle(order(q("1/2")));
    CHECK(inv(4, 4) == 1);
    CHECK(inv(1, 0) == q("1/2"));
    const auto product = compose_trunc(delta_triangle(order(q("1/2"))), inv, 8);
    CHECK(product == TruncatedMatrix<Rational>::identity(8));
}

TEST_CASE("alpha = 0 gives the identity difference operator") {
    CHECK(delta_triangle(order(Rational(0))).truncate(10) == TruncatedMatrix<Rational>::identity(10));
}

TEST_CASE("semigroup Delta^a Delta^b = Delta^{a+b}") {
    oracle::RationalGen gen(3);
    for (int trial = 0; trial < 6; ++trial) {
        const Rational a = gen.next();
        const Rational b = gen.next();
        CHECK(compose_trunc(delta_triangle(order(a)), delta_triangle(order(b)), 16) ==
              delta_triangle(order(Rational(a + b))).truncate(16));
    }
    CHECK(compose_trunc(delta_triangle(order(q("1/2"))), delta_triangle(order(q("1/2"))), 16) ==
          delta_triangle(order(q("1"))).truncate(16));
}

TEST_CASE("binomial triangle") {
    const BinomialParams<Rational> ones(q("1"), q("1"));
    const auto b = binomial_triangle(ones);
    CHECK(b(0, 0) == 1);
    CHECK(b(2, 1) == q("1/2"));
    CHECK_THROWS_AS(BinomialParams<Rational>(q("1"), q("-1")), DomainError);

    const auto m = b.truncate(12);
    CHECK(equals_dense(m, oracle::binomial_dense(q("1"), q("1"), 12)));
}

TEST_CASE("binomial reduces to Euler when r + s = 1") {
    const Rational r = q("1/3");
    const auto b = binomial_triangle(BinomialParams<Rational>(r, q("2/3"))).truncate(16);
    for (std::size_t n = 0; n < 16; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational euler = oracle::factorial_binomial(static_cast<long>(n), static_cast<long>(k)) *
                                   oracle::rpow(Rational(1 - r), static_cast<long>(n - k)) *
                                   oracle::rpow(r, static_cast<long>(k));
            CHECK(b(n, k) == euler);
        }
    }
}

TEST_CASE("binomial inverse") {
    const BinomialParams<Rational> ones(q("1"), q("1"));
    const auto inv = binomial_inv_triangle(ones).truncate(2);
    CHECK(inv(0, 0) == 1);
    CHECK(inv(1, 0) == -1);
    CHECK(inv(1, 1) == 2);
    CHECK(invert_trunc(binomial_triangle(ones), 2) == inv);

    const BinomialParams<Rational> p23(q("2"), q("3"));
    CHECK(compose_trunc(binomial_triangle(p23), binomial_inv_triangle(p23), 8) ==
          TruncatedMatrix<Rational>::identity(8));
    CHECK_THROWS_AS(binomial_inv_triangle(BinomialParams<Rational>(q("0"), q("1"))), DomainError);
}

TEST_CASE("row stochasticity of binomial and lambda") {
    const std::vector<std::pair<const char*, const char*>> params{{"1", "1"}, {"2", "3"}, {"-1", "3"}, {"5/2", "-1/3"}};
    for (const auto& [r, s] : params) {
        const auto m = binomial_triangle(BinomialParams<Rational>(q(r), q(s))).truncate(14);
        for (std::size_t n = 0; n < 14; ++n) {
            Rational sum(0);
            for (std::size_t k = 0; k <= n; ++k) sum += m(n, k);
            CHECK(sum == 1);
        }
    }
    for (auto preset : {LambdaPreset::cesaro, LambdaPreset::squares, LambdaPreset::powers2}) {
        const auto m = lambda_triangle(LambdaSeq<Rational>::preset(preset)).truncate(14);
        for (std::size_t n = 0; n < 14; ++n) {
            Rational sum(0);
            for (std::size_t k = 0; k <= n; ++k) sum += m(n, k);
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("lambda triangle") {
    const auto cesaro = lambda_triangle(LambdaSeq<Rational>::preset(LambdaPreset::cesaro));
    for (std::size_t n = 0; n < 16; ++n)
        for (std::size_t k = 0; k <= n; ++k) CHECK(cesaro(n, k) == Rational(1, n + 1));
    CHECK(lambda_triangle(LambdaSeq<Rational>::preset(LambdaPreset::squares))(0, 0) == 1);
    CHECK(lambda_triangle(LambdaSeq<Rational>::preset(LambdaPreset::powers2))(2, 1) == q("1/4"));
}

TEST_CASE("lambda strict increase is enforced") {
    CHECK_THROWS_AS(LambdaSeq<Rational>::from_values({q("1"), q("2"), q("2")}), LambdaError);
    try {
        (void)LambdaSeq<Rational>::from_values({q("1"), q("3"), q("5"), q("4")});
        FAIL("expected LambdaError");
    } catch (const LambdaError& e) {
        CHECK(e.index() == 3);
    }
    CHECK_THROWS_AS(LambdaSeq<Rational>::from_values({q("0"), q("1")}), LambdaError);

    // generator sequences are checked on evaluation
    const LambdaSeq<Rational> bad("bad", [](std::size_t k) { return k < 4 ? Rational(k + 1) : Rational(1); });
    const auto tri = lambda_triangle(bad);
    CHECK(tri(3, 1) == q("1/4"));
    CHECK_THROWS_AS(tri.truncate(6), LambdaError);

    const LambdaSeq<Rational> negative("negative", [](std::size_t) { return Rational(-1); });
    CHECK_THROWS_AS(lambda_triangle(negative), LambdaError);
}

TEST_CASE("lambda inverse is bidiagonal") {
    const auto l = LambdaSeq<Rational>::preset(LambdaPreset::cesaro);
    const auto inv = lambda_inv_triangle(l);
    CHECK(inv(0, 0) == 1);
    CHECK(inv(2, 0) == 0);
    CHECK(inv(2, 1) == -2);
    CHECK(inv(2, 2) == 3);
    CHECK(invert_trunc(lambda_triangle(l), 3) == inv.truncate(3));

    const auto sq = LambdaSeq<Rational>::preset(LambdaPreset::squares);
    CHECK(compose_trunc(lambda_triangle(sq), lambda_inv_triangle(sq), 12) == TruncatedMatrix<Rational>::identity(12));
}

TEST_CASE("composed triangle entries") {
    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    const auto a = composed_triangle(spec);
    CHECK(a(0, 0) == 1);
    CHECK(a(1, 0) == q("1/8"));
    CHECK(a(1, 1) == q("1/4"));
    CHECK(a(2, 0) == q("-1/96"));
    CHECK(a(2, 2) == q("1/12"));
}

TEST_CASE("composed triangle reproduces the displayed symbolic entries") {
    // generic rational parameters, lambda from squares
    const Rational alpha = q("3/7");
    const Rational r = q("5/2");
    const Rational s = q("-1/3");
    const auto spec = OperatorSpec<Rational>{BinomialParams<Rational>(r, s), order(alpha),
                                             LambdaSeq<Rational>::preset(LambdaPreset::squares)};
    const auto a = composed_triangle(spec);
    const auto& l = spec.lambda;
    const Rational sr = r + s;

    CHECK(a(0, 0) == 1);
    // row 1, with the lambda_1 denominator
    CHECK(a(1, 0) == (l[0] / l[1]) * (s - alpha * r) / sr);
    CHECK(a(1, 1) == (Rational(l[1] - l[0]) / l[1]) * r / sr);
    CHECK(a(2, 0) == (l[0] / l[2]) * (s * s - 2 * alpha * s * r + alpha * (alpha - 1) / 2 * r * r) / (sr * sr));
    CHECK(a(2, 1) == (Rational(l[1] - l[0]) / l[2]) * (2 * s * r - alpha * r * r) / (sr * sr));
    CHECK(a(2, 2) == (Rational(l[2] - l[1]) / l[2]) * r * r / (sr * sr));
}

TEST_CASE("composed triangle equals diag-conjugated dense product") {
    for (auto preset : {LambdaPreset::cesaro, LambdaPreset::squares, LambdaPreset::powers2}) {
        for (const char* alpha : {"1/2", "-3/2", "2"}) {
            const auto spec = make_spec(alpha, "2", "3", preset);
            const auto dense = oracle::composed_dense(q(alpha), q("2"), q("3"), lambda_values(spec.lambda, 10), 10);
            CHECK(equals_dense(composed_triangle(spec).truncate(10), dense));
        }
    }
}

TEST_CASE("composed inverse") {
    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    const auto inv = composed_inv_triangle(spec);
    CHECK(inv(0, 0) == 1);
    CHECK(inv.truncate(4) == invert_trunc(composed_triangle(spec), 4));
    CHECK(inv.truncate(6) == invert_trunc(composed_triangle(spec), 6));

    // Gauss-Jordan on the dense oracle matrix agrees too
    const auto dense = oracle::composed_dense(q("1/2"), q("1"), q("1"), lambda_values(spec.lambda, 8), 8);
    CHECK(equals_dense(inv.truncate(8), oracle::gauss_jordan_inverse(dense)));

    CHECK_THROWS_AS(composed_inv_triangle(make_spec("1/2", "0", "1", LambdaPreset::cesaro)), DomainError);
}

TEST_CASE("alpha = 0 composed inverse is the conjugated binomial inverse") {
    const auto spec = make_spec("0", "2", "3", LambdaPreset::cesaro);
    const auto inv = composed_inv_triangle(spec);
    const auto binv = binomial_inv_triangle(spec.params);
    for (std::size_t n = 0; n < 10; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(inv(n, k) == spec.lambda[k] / spec.lambda.step(n) * binv(n, k));
}

TEST_CASE("negative r is admissible") {
    const auto spec = make_spec("3/2", "-1", "3", LambdaPreset::powers2);
    CHECK(compose_trunc(composed_triangle(spec), composed_inv_triangle(spec), 12) ==
          TruncatedMatrix<Rational>::identity(12));
}

TEST_CASE("inverse pairs and oracle agreement over a parameter grid") {
    oracle::RationalGen gen(2024);
    for (int trial = 0; trial < 8; ++trial) {
        Rational r = gen.next();
        Rational s = gen.next();
        if (r == 0 || r + s == 0) continue;
        const auto spec = OperatorSpec<Rational>{BinomialParams<Rational>(r, s), order(gen.next()),
                                                 LambdaSeq<Rational>::preset(LambdaPreset::squares)};
        const std::size_t n = 12;
        const auto pairs = std::vector<std::pair<Triangle<Rational>, Triangle<Rational>>>{
            {delta_triangle(spec.alpha), delta_inv_triangle(spec.alpha)},
            {binomial_triangle(spec.params), binomial_inv_triangle(spec.params)},
            {lambda_triangle(spec.lambda), lambda_inv_triangle(spec.lambda)},
            {composed_triangle(spec), composed_inv_triangle(spec)}};
        for (const auto& [fwd, inv] : pairs) {
            INFO(fwd.name());
            CHECK(compose_trunc(fwd, inv, n) == TruncatedMatrix<Rational>::identity(n));
            CHECK(compose_trunc(inv, fwd, n) == TruncatedMatrix<Rational>::identity(n));
            CHECK(inv.truncate(n) == invert_trunc(fwd, n));
        }
    }
}

TEST_CASE("named triangles") {
    const auto spec = make_spec("1/2", "1", "1", LambdaPreset::cesaro);
    for (const auto& name : operator_names()) CHECK(named_triangle(name, spec).name() == name);
    CHECK_THROWS_AS(named_triangle<Rational>("nope", spec), DomainError);
}

TEST_CASE("float backend agrees with exact at moderate N") {
    const auto exact = make_spec("1/2", "2", "3", LambdaPreset::cesaro);
    const OperatorSpec<double> approx{BinomialParams<double>(2.0, 3.0), order(0.5),
                                      LambdaSeq<double>::preset(LambdaPreset::cesaro)};
    const auto a = composed_triangle(exact).truncate(12);
    const auto b = composed_triangle(approx).truncate(12);
    for (std::size_t n = 0; n < 12; ++n)
        for (std::size_t k = 0; k <= n; ++k) CHECK(nearly_equal(a(n, k).get_d(), b(n, k)));
}
