#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhn/spectral.hpp"

using namespace mhn;

TEST_CASE("curve construction and sanity") {
    auto rep = verify_curve_sanity();
    INFO(rep.witness.value_or(""));
    CHECK(rep.verified);
    SpectralCurve c = make_monotone_curve();
    Poly z = Poly::x();
    CHECK(c.sigma == RationalFunction(z, z - Poly(Rational(1))));
    CHECK(c.sigma.eval(Rational(2)) == Rational(2));
    CHECK(c.branch_point == Rational(2));
}

TEST_CASE("omega01 values") {
    SpectralCurve c = make_monotone_curve();
    RationalFunction w = omega01(c);
    Poly z = Poly::x();
    CHECK(w == RationalFunction(Poly(Rational(2)) - z, z * z));
    CHECK(w.eval(Rational(1)) == Rational(1));
    CHECK(w.eval(Rational(2)) == Rational(0));
    CHECK(w.den().eval(Rational(0)).is_zero());       // double pole at 0
    CHECK(!w.den().eval(Rational(2)).is_zero());      // no pole at 2
}

TEST_CASE("branch data expansions") {
    SpectralCurve c = make_monotone_curve();
    BranchData bd(c, 8);
    // sigma(2+u) - 2 = -u/(1+u) = -u + u^2 - u^3 + ...
    for (int k = 1; k <= 6; ++k) CHECK(bd.v().coeff(k) == Rational((k % 2) ? -1 : 1));
    CHECK(bd.v().coeff(0) == Rational(0));
    // kernel denominator (y(sigma)-y) dx/dz = -(z-2)^2/(z^2 (z-1))
    Poly z = Poly::x();
    Poly zm2 = z - Poly(Rational(2));
    CHECK(bd.denominator_fun() == RationalFunction(-(zm2 * zm2), z * z * (z - Poly(Rational(1)))));
    // double zero at u = 0, so the working inverse has a double pole
    CHECK(bd.inv_double_denom().valuation() == -2);
    // leading Laurent order of the m = 1 kernel term against the denominator
    CHECK((bd.kernel_term(1) * bd.inv_double_denom()).valuation() == -1);
    // B(z, sigma(z))/du^2 = -1/(u^2 (2+u)^2)
    CHECK(bd.b_z_sigma().valuation() == -2);
    CHECK(bd.b_z_sigma().coeff(-2) == Rational(-1, 4));
}

TEST_CASE("deck involution at the level of local coordinates") {
    SpectralCurve c = make_monotone_curve();
    BranchData bd = recursion_kernel(10);
    // v(v(u)) = u exactly: the kernel numerator endpoint swap is an involution
    RationalFunction sigma_u = c.sigma.shift(Rational(2)) - RationalFunction(Rational(2));
    LaurentExpansion comp = ratfun_at_series(sigma_u, bd.v());
    CHECK(comp.matches(LaurentExpansion::monomial(Rational(0), 1, Rational(1), comp.trunc_order())));
}

TEST_CASE("Bergman kernel legs reproduce the direct expansions") {
    BranchData bd = recursion_kernel(8);
    SpectralCurve c = bd.curve();
    Rational z0(5);
    Rational w0 = z0 - Rational(2);
    // sum_m leg_m(u) / (z0-2)^{m+2} reproduces each u-coefficient of
    // B(role, z0)/du dz0 once m runs past the coefficient order
    RationalFunction id_u(Poly({Rational(2), Rational(1)}));
    RationalFunction sigma_u = c.sigma.shift(Rational(2));
    for (bool sigma_role : {false, true}) {
        RationalFunction arg = sigma_role ? sigma_u : id_u;
        RationalFunction direct = RationalFunction(Rational(1)) / ((arg - RationalFunction(z0)) *
                                                                   (arg - RationalFunction(z0)));
        if (sigma_role) direct = direct * c.sigma.derivative().shift(Rational(2));
        LaurentExpansion truth = laurent_of_rational(direct, Rational(0), 6);
        LaurentExpansion partial = LaurentExpansion::zero(Rational(0), 8);
        for (int m = 0; m <= 6; ++m)
            partial += omega02_leg(bd, m, sigma_role) * (Rational(1) / w0.pow(m + 2));
        for (long k = 0; k <= 6; ++k) CHECK(partial.coeff(k) == truth.coeff(k));
    }
    // kernel numerator primitive: sum_m (v^m - u^m)/(z0-2)^{m+1} equals
    // 1/(z0 - sigma(z)) - 1/(z0 - z) coefficientwise
    RationalFunction prim = RationalFunction(Rational(1)) / (RationalFunction(z0) - sigma_u) -
                            RationalFunction(Rational(1)) / (RationalFunction(z0) - id_u);
    LaurentExpansion truth = laurent_of_rational(prim, Rational(0), 6);
    LaurentExpansion partial = LaurentExpansion::zero(Rational(0), 8);
    for (int m = 1; m <= 7; ++m)
        partial += bd.kernel_term(m) * (Rational(1) / w0.pow(m + 1));
    for (long k = 0; k <= 6; ++k) CHECK(partial.coeff(k) == truth.coeff(k));
}

TEST_CASE("omega_{0,3} matches the classical residue formula") {
    TopologicalRecursion tr;
    const PoleBasisForm& w03 = tr.omega(0, 3);
    REQUIRE(w03.terms.size() == 1);
    CHECK(w03.terms.at({2, 2, 2}) == Rational(8));
    CHECK(w03.is_symmetric());
    CHECK(w03.pole_bound() == 2);
}

TEST_CASE("omega_{1,1} frozen by hand residue computation") {
    TopologicalRecursion tr;
    const PoleBasisForm& w11 = tr.omega(1, 1);
    // (v-u), (v^2-u^2), (v^3-u^3) against -1/(u^2(2+u)^2) / (2(y-y sigma)x')
    CHECK(w11.terms.size() == 2);
    CHECK(w11.terms.at({3}) == Rational(1));
    CHECK(w11.terms.at({4}) == Rational(1));
    CHECK(w11.pole_bound() <= 4);
}

TEST_CASE("unstable omegas are rejected") {
    TopologicalRecursion tr;
    CHECK_THROWS_AS(tr.omega(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(tr.omega(0, 2), std::invalid_argument);
}

TEST_CASE("higher forms are symmetric with residue-free poles") {
    TopologicalRecursion tr;
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {1, 2}, {2, 1}}) {
        const PoleBasisForm& f = tr.omega(g, n);
        CHECK(!f.terms.empty());
        CHECK(f.is_symmetric());
        for (const auto& [key, c] : f.terms)
            for (int k : key) CHECK(k >= 2);
    }
}

TEST_CASE("truncation stability: +4 working order changes nothing") {
    TopologicalRecursion tr, tr4(4);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {1, 2}})
        CHECK(tr.omega(g, n) == tr4.omega(g, n));
}

TEST_CASE("x-series inversion") {
    XSeries xs = invert_x_series(8);
    // Lagrange inversion oracle for w = x(1+w)^2: [x^k] w = C(2k, k-1)/k
    CHECK(xs.z.coeff(0) == Rational(1));
    for (int k = 1; k <= 7; ++k)
        CHECK(xs.z.coeff(k) == Rational(BigInt::binomial(2 * k, k - 1), BigInt(k)));
    // frozen: 1, 1, 2, 5, 14, 42
    CHECK(xs.z.coeff(1) == Rational(1));
    CHECK(xs.z.coeff(2) == Rational(2));
    CHECK(xs.z.coeff(3) == Rational(5));
    CHECK(xs.z.coeff(4) == Rational(14));
    CHECK(xs.z.coeff(5) == Rational(42));
}

TEST_CASE("W tables: anchors") {
    // (0,1): W(a) = [x^{a-1}] z(x) = 1, 1, 2, 5
    XSeries xs(6);
    CHECK(xs.z.coeff(0) == Rational(1));
    CHECK(xs.z.coeff(1) == Rational(1));
    CHECK(xs.z.coeff(2) == Rational(2));
    CHECK(xs.z.coeff(3) == Rational(5));
    // (0,2): W(1,1) = 1
    W02Table w02(3);
    CHECK(w02.value({1, 1}) == Rational(1));
    // symmetry of the (0,2) table
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) CHECK(w02.value({a, b}) == w02.value({b, a}));
    // (1,1): W(1) = 0
    TopologicalRecursion tr;
    WTable w11(tr.omega(1, 1), 2);
    CHECK(w11.value({1}) == Rational(0));
}

TEST_CASE("bridge comparison on small ranges") {
    TopologicalRecursion tr;
    HurwitzTable table(8, 10, 4);
    auto r01 = compare_with_hurwitz(tr, table, 0, 1, 4);
    INFO(r01.witness.value_or(""));
    CHECK(r01.verified);
    auto r02 = compare_with_hurwitz(tr, table, 0, 2, 4);
    INFO(r02.witness.value_or(""));
    CHECK(r02.verified);
    auto r11 = compare_with_hurwitz(tr, table, 1, 1, 4);
    INFO(r11.witness.value_or(""));
    CHECK(r11.verified);
    auto r03 = compare_with_hurwitz(tr, table, 0, 3, 2);
    INFO(r03.witness.value_or(""));
    CHECK(r03.verified);
}

TEST_CASE("quadratic loop equation holds and the negative control fails") {
    TopologicalRecursion tr;
    CHECK(check_quadratic_loop(tr, 0, 1, 24).verified);
    CHECK(check_quadratic_loop(tr, 1, 0, 24).verified);
    CHECK(check_quadratic_loop(tr, 0, 2, 24).verified);
    CHECK(check_quadratic_loop(tr, 1, 1, 28).verified);

    // corrupt omega_{0,3} by +1 on its only coefficient: must break holomorphy
    std::map<std::pair<int, int>, PoleBasisForm> bad;
    PoleBasisForm w03 = tr.omega(0, 3);
    w03.terms[{2, 2, 2}] += Rational(1);
    bad[{0, 3}] = w03;
    CHECK(!check_quadratic_loop(tr, 0, 2, 24, &bad).verified);

    PoleBasisForm w11 = tr.omega(1, 1);
    w11.terms[{3}] += Rational(1);
    std::map<std::pair<int, int>, PoleBasisForm> bad2{{{1, 1}, w11}};
    CHECK(!check_quadratic_loop(tr, 1, 0, 24, &bad2).verified);
}
