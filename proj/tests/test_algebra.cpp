#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mhn/laurent.hpp"
#include "mhn/poly.hpp"
#include "mhn/rational_function.hpp"
#include "mhn/truncated_series.hpp"

using namespace mhn;

namespace {

std::mt19937_64 rng(987654321);

Rational small_rational() {
    std::uniform_int_distribution<long long> d(-9, 9);
    long long den = 0;
    while (den == 0) den = d(rng);
    return Rational(d(rng), den);
}

Poly random_poly(int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    int deg = dd(rng);
    std::vector<Rational> c(deg + 1);
    for (auto& v : c) c[&v - c.data()] = small_rational();
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("poly basics") {
    Poly x = Poly::x();
    Poly p = x * x + Poly(Rational(1));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(Poly().degree() == -1);
    CHECK(p.eval(Rational(3)) == Rational(10));
    Poly q, r;
    Poly::divmod(p, x - Poly(Rational(1)), q, r);
    CHECK(q * (x - Poly(Rational(1))) + r == p);
    CHECK(r == Poly(Rational(2)));
    CHECK(Poly::gcd(p * (x - Poly(2)), (x - Poly(2)) * x) == x - Poly(2));
}

TEST_CASE("poly_eval_shift examples") {
    Poly x = Poly::x();
    CHECK(poly_eval_shift(x * x, Rational(1)) == x * x + Rational(2) * x + Poly(Rational(1)));
    CHECK(poly_eval_shift(Poly(), Rational(5)) == Poly());
    // g_(2)(x) = (x+1)(x-2) shifted by 1 equals (x+2)(x-1) = x^2 + x - 2
    Poly g2 = (x + Poly(Rational(1))) * (x - Poly(Rational(2)));
    CHECK(poly_eval_shift(g2, Rational(1)) == x * x + x - Poly(Rational(2)));
}

TEST_CASE("poly shift composes") {
    for (int i = 0; i < 100; ++i) {
        Poly p = random_poly(5);
        Rational a = small_rational(), b = small_rational();
        CHECK(p.eval_shift(a).eval_shift(b) == p.eval_shift(a + b));
        Rational v = small_rational();
        CHECK(p.eval_shift(a).eval(v) == p.eval(v + a));
    }
}

TEST_CASE("rational function reduction and equality") {
    Poly x = Poly::x();
    RationalFunction f(x * x - Poly(Rational(1)), x - Poly(Rational(1)));
    CHECK(f == RationalFunction(x + Poly(Rational(1))));
    CHECK(f.den() == Poly(Rational(1)));
    RationalFunction g(Poly(Rational(2)) * x, Poly(Rational(4)));
    CHECK(g.den().leading() == Rational(1));  // monic after reduction
    CHECK(g.eval(Rational(3)) == Rational(3, 2));
    RationalFunction xz(x - Poly(Rational(1)), x * x);  // (z-1)/z^2
    CHECK(xz.derivative() == RationalFunction(Poly(Rational(2)) - x, x * x * x));
    CHECK_THROWS_AS(xz.eval(Rational(0)), std::domain_error);
}

TEST_CASE("rational function composition") {
    Poly z = Poly::x();
    RationalFunction sigma(z, z - Poly(Rational(1)));  // z/(z-1)
    CHECK(sigma.compose(sigma) == RationalFunction(z));
    RationalFunction x((z - Poly(Rational(1))), z * z);
    CHECK(x.compose(sigma) == x);
}

TEST_CASE("laurent_of_rational examples") {
    Poly z = Poly::x();
    // 1/(z-2) at 2: single u^{-1} term
    auto e1 = laurent_of_rational(RationalFunction(Poly(Rational(1)), z - Poly(Rational(2))),
                                  Rational(2), 3);
    CHECK(e1.coeff(-1) == Rational(1));
    CHECK(e1.valuation() == -1);
    for (long k = 0; k <= 3; ++k) CHECK(e1.coeff(k) == Rational(0));

    // z/(z-1) at 2 through order 2: 2 - u + u^2
    auto e2 = laurent_of_rational(RationalFunction(z, z - Poly(Rational(1))), Rational(2), 2);
    CHECK(e2.coeff(0) == Rational(2));
    CHECK(e2.coeff(1) == Rational(-1));
    CHECK(e2.coeff(2) == Rational(1));

    // (2-z)/z^3 at 2: -u/8 + 3u^2/16 - ...
    auto e3 = laurent_of_rational(RationalFunction(Poly(Rational(2)) - z, z * z * z), Rational(2), 2);
    CHECK(e3.coeff(1) == Rational(-1, 8));
    CHECK(e3.coeff(2) == Rational(3, 16));
    CHECK(e3.valuation() == 1);
}

TEST_CASE("laurent product matches expansion of products") {
    Poly z = Poly::x();
    std::uniform_int_distribution<int> dk(0, 3);
    for (int i = 0; i < 60; ++i) {
        // random rational functions with poles only at the center 2
        auto make = [&] {
            Poly num = random_poly(3);
            if (num.is_zero()) num = Poly(Rational(1));
            int k = dk(rng);
            Poly den(Rational(1));
            for (int j = 0; j < k; ++j) den *= (z - Poly(Rational(2)));
            return RationalFunction(num, den);
        };
        RationalFunction f = make(), g = make();
        long order = 6;
        auto lf = laurent_of_rational(f, Rational(2), order);
        auto lg = laurent_of_rational(g, Rational(2), order);
        auto lfg = laurent_of_rational(f * g, Rational(2), order);
        CHECK((lf * lg).matches(lfg));
    }
}

TEST_CASE("laurent inverse and division") {
    Poly z = Poly::x();
    auto f = laurent_of_rational(RationalFunction(z, (z - Poly(Rational(2))).monic() *
                                                          (z - Poly(Rational(2)))),
                                 Rational(2), 6);
    auto inv = f.inverse();
    auto prod = f * inv;
    CHECK(prod.coeff(0) == Rational(1));
    for (long k = 1; k <= prod.trunc_order(); ++k) CHECK(prod.coeff(k) == Rational(0));
    CHECK_THROWS_AS(LaurentExpansion::zero(Rational(2), 5).inverse(), std::domain_error);
    CHECK_THROWS_AS(f.coeff(100), std::out_of_range);
}

TEST_CASE("laurent residue guard") {
    auto lo = LaurentExpansion::monomial(Rational(2), -1, Rational(7), -1);
    CHECK_THROWS_AS(lo.residue(), std::out_of_range);
    auto ok = LaurentExpansion::monomial(Rational(2), -1, Rational(7), 0);
    CHECK(ok.residue() == Rational(7));
}

TEST_CASE("laurent derivative") {
    Poly z = Poly::x();
    RationalFunction f(z, z - Poly(Rational(1)));
    auto s = laurent_of_rational(f, Rational(2), 6);
    auto ds = laurent_of_rational(f.derivative(), Rational(2), 5);
    CHECK(s.derivative().matches(ds));
}

TEST_CASE("series basics and cut-join examples") {
    TruncatedSeries::Caps caps{4, 4, 4};
    TruncatedSeries p2(caps), p1p1(caps), p3(caps);
    p2.add_term(0, 0, {0, 1, 0, 0}, Rational(1));
    p1p1.add_term(0, 0, {2, 0, 0, 0}, Rational(1));
    p3.add_term(0, 0, {0, 0, 1, 0}, Rational(1));

    TruncatedSeries cj2 = series_apply_cut_join(p2);
    CHECK(cj2.coeff(0, 0, {2, 0, 0, 0}) == Rational(1));  // p2 -> p1^2
    CHECK(cj2.term_count() == 1);

    TruncatedSeries cj11 = series_apply_cut_join(p1p1);
    CHECK(cj11.coeff(0, 0, {0, 1, 0, 0}) == Rational(1));  // p1^2 -> p2
    CHECK(cj11.term_count() == 1);

    // literal double-sum expansion gives 3 p1 p2 for input p3
    TruncatedSeries cj3 = series_apply_cut_join(p3);
    CHECK(cj3.coeff(0, 0, {1, 1, 0, 0}) == Rational(3));
    CHECK(cj3.term_count() == 1);
}

TEST_CASE("cut-join linearity") {
    TruncatedSeries::Caps caps{5, 5, 3};
    std::uniform_int_distribution<int> de(0, 2), dp(0, 5);
    auto random_series = [&] {
        TruncatedSeries f(caps);
        for (int i = 0; i < 6; ++i) {
            std::vector<int> p(5, 0);
            for (int tries = 0; tries < 2; ++tries) {
                int idx = dp(rng);
                if (idx >= 1 && TruncatedSeries::weight(p) + idx <= caps.d_max) p[idx - 1] += 1;
            }
            f.add_term(de(rng), de(rng), p, small_rational());
        }
        return f;
    };
    for (int i = 0; i < 40; ++i) {
        TruncatedSeries f = random_series(), g = random_series();
        Rational a = small_rational(), b = small_rational();
        CHECK(series_apply_cut_join(f * a + g * b) ==
              series_apply_cut_join(f) * a + series_apply_cut_join(g) * b);
    }
}

TEST_CASE("series log examples") {
    TruncatedSeries::Caps caps{2, 2, 2};
    CHECK(series_log(TruncatedSeries::one(caps)).is_zero());

    TruncatedSeries z = TruncatedSeries::one(caps);
    z.add_term(1, 0, {1, 0}, Rational(1));  // 1 + s p1
    TruncatedSeries f = series_log(z);
    CHECK(f.coeff(1, 0, {1, 0}) == Rational(1));
    CHECK(f.coeff(2, 0, {2, 0}) == Rational(-1, 2));

    TruncatedSeries not_one(caps);
    CHECK_THROWS_AS(series_log(not_one), std::domain_error);
}

TEST_CASE("exp(log) round trip on random series") {
    TruncatedSeries::Caps caps{3, 3, 3};
    std::uniform_int_distribution<int> ds(1, 3), de(0, 3);
    for (int i = 0; i < 50; ++i) {
        TruncatedSeries z = TruncatedSeries::one(caps);
        for (int k = 0; k < 5; ++k) {
            std::vector<int> p(3, 0);
            int idx = de(rng);
            if (idx >= 1) p[idx - 1] = 1;
            z.add_term(ds(rng), de(rng), p, small_rational());
        }
        CHECK(series_exp(series_log(z)) == z);
    }
    // power-sum fallback path: terms without s
    for (int i = 0; i < 20; ++i) {
        TruncatedSeries z = TruncatedSeries::one(caps);
        std::vector<int> p(3, 0);
        p[0] = 1;
        z.add_term(0, 1, p, small_rational());
        z.add_term(ds(rng), 0, p, small_rational());
        CHECK(series_exp(series_log(z)) == z);
    }
}

TEST_CASE("series multiplication respects caps exactly") {
    TruncatedSeries::Caps caps{3, 3, 2};
    TruncatedSeries a(caps), b(caps);
    a.add_term(2, 1, {1, 0, 0}, Rational(1));
    b.add_term(2, 1, {0, 1, 0}, Rational(1));
    CHECK((a * b).is_zero());  // s-degree 4 > cap
    TruncatedSeries c(caps);
    c.add_term(1, 1, {1, 0, 0}, Rational(3));
    auto prod = a * c;
    CHECK(prod.coeff(3, 2, {2, 0, 0}) == Rational(3));
}
