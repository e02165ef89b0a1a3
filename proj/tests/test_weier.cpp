#include "doctest.h"
#include "oracles.hpp"

#include "weier/equation.hpp"
#include "weier/error.hpp"

#include <random>

using namespace weier;

namespace {

poly qpoly(std::vector<long> c)
{
    std::vector<kelem> k;
    for (long x : c) k.emplace_back(x);
    return poly(k);
}

field_spec K(long d)
{
    return d == 0 ? field_spec::rationals() : field_spec::imaginary_quadratic(d);
}

kelem random_elem(std::mt19937_64 & rng, field_spec f, long bound)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    if (f.is_rational()) return kelem(rat(dist(rng)));
    return kelem(rat(dist(rng)), rat(dist(rng)), f);
}

kelem random_nonzero(std::mt19937_64 & rng, field_spec f, long bound)
{
    kelem x;
    while (x.is_zero()) x = random_elem(rng, f, bound);
    return x;
}

poly random_poly(std::mt19937_64 & rng, field_spec f, int deg, long bound)
{
    std::vector<kelem> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_elem(rng, f, bound));
    return poly(c);
}

weierstrass_eq random_eq(std::mt19937_64 & rng, field_spec f, int g)
{
    for (;;) {
        weierstrass_eq E(f, g, random_poly(rng, f, 2 * g + 2, 5), random_poly(rng, f, g + 1, 3));
        try {
            validate(E);
            return E;
        } catch (error const &) {
        }
    }
}

eq_transform random_transform(std::mt19937_64 & rng, field_spec f, int g)
{
    eq_transform T;
    do {
        T.m = mat2{random_elem(rng, f, 4), random_elem(rng, f, 4), random_elem(rng, f, 4), random_elem(rng, f, 4)};
    } while (T.m.det().is_zero());
    T.e = random_nonzero(rng, f, 4);
    std::vector<kelem> h;
    for (int i = 0; i <= g + 1; ++i) h.push_back(random_elem(rng, f, 3));
    T.H = binary_form(g + 1, h);
    return T;
}

kelem law_factor(eq_transform const & T, int g)
{
    return pow(T.e, 4L * (2 * g + 1)) * pow(T.m.det(), -2L * (g + 1) * (2 * g + 1));
}

} // namespace

TEST_CASE("validate examples")
{
    weierstrass_eq E(K(0), 2, qpoly({1, 0, 0, 0, 0, 1}), poly());
    auto r = validate(E);
    CHECK(r.genus == 2);
    CHECK(r.deg_F == 5);
    CHECK(r.ramified_at_infinity);
    /* t^6 (1/t^5 + 1) = t + t^6 */
    CHECK(r.infinity_chart.P == qpoly({0, 1, 0, 0, 0, 0, 1}));

    weierstrass_eq E2(K(0), 1, qpoly({1, 1, 0, 0, 1}), poly());
    auto r2 = validate(E2);
    CHECK(r2.deg_F == 4);
    CHECK(!r2.ramified_at_infinity);
    CHECK(E2.F_form().coeffs.back() == kelem(4));

    weierstrass_eq E3(K(0), 2, qpoly({1, 0, 0, 2, 0, 0, 1}), poly());
    try {
        validate(E3);
        FAIL("expected a singular fiber");
    } catch (error const & e) {
        CHECK(e.code() == errc::singular_generic_fiber);
    }
    /* deg F <= 2g forces a double root at infinity */
    CHECK_THROWS_AS(validate(weierstrass_eq(K(0), 2, qpoly({1, 0, 0, 0, 1}), poly())), error);
    CHECK_THROWS_AS(weierstrass_eq(K(0), 1, qpoly({1, 0, 0, 0, 0, 1}), poly()), error);
    CHECK_THROWS_AS(weierstrass_eq(K(0), 1, poly(), qpoly({0, 0, 0, 1})), error);
    CHECK_THROWS_AS(weierstrass_eq(K(0), 1, qpoly({1, 0, 0, 1}), qpoly({0, 0, 1}), true), error);
    CHECK(weierstrass_eq(K(0), 1, qpoly({1, 0, 0, 1}), qpoly({0, 1}), true).pointed);
}

TEST_CASE("discriminant examples")
{
    rat const ell = oracle::elliptic_disc(0, 0, 1, 0, 0);
    CHECK(ell == -27);
    weierstrass_eq E(K(0), 1, qpoly({0, 0, 0, 1}), qpoly({1}));
    CHECK(discriminant(E) == kelem(ell));

    /* disc of Z * g5 at degree 6 equals disc(g5) * lead(g5)^2 */
    std::vector<rat> g5{4, 0, 0, 0, 0, 4}, dg5{0, 0, 0, 0, 20};
    rat res = oracle::sylvester(g5, dg5);
    rat disc_g5 = res / 4; /* (-1)^10 res / a_5 */
    rat expect = disc_g5 * 16 / rat(4096);
    CHECK(expect == 800000);
    weierstrass_eq E2(K(0), 2, qpoly({1, 0, 0, 0, 0, 1}), poly());
    CHECK(discriminant(E2) == kelem(expect));

    /* the genus 1 normalization matches the classical discriminant on random curves */
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-6, 6);
    for (int it = 0; it < 40; ++it) {
        long a1 = dist(rng), a2 = dist(rng), a3 = dist(rng), a4 = dist(rng), a6 = dist(rng);
        rat want = oracle::elliptic_disc(a1, a2, a3, a4, a6);
        if (want == 0) continue;
        weierstrass_eq Ee(K(0), 1, qpoly({a6, a4, a2, 1}), qpoly({a3, a1}));
        CHECK(discriminant(Ee) == kelem(want));
    }
}

TEST_CASE("transform examples")
{
    weierstrass_eq E(K(0), 1, qpoly({0, 0, 0, 1}), qpoly({1}));
    auto id = eq_transform::diagonal(1, 1, 0, 1, poly());
    CHECK(transform(E, id) == E);
    CHECK(id == eq_transform::identity(1));

    auto T = eq_transform::diagonal(1, 4, 0, 8, poly());
    weierstrass_eq E2 = transform(E, T);
    /* 64 y'^2 + 8 y' = 64 x'^3 */
    CHECK(E2.Q == poly(kelem(rat(1, 8))));
    CHECK(E2.P == qpoly({0, 0, 0, 1}));
    kelem d2 = discriminant(E2);
    CHECK(d2 == kelem(rat(-27, 4096)));
    CHECK(d2 == law_factor(T, 1) * discriminant(E));

    auto S = eq_transform::diagonal(1, 1, kelem(rat(7, 3)), 1, poly());
    CHECK(discriminant(transform(E, S)) == discriminant(E));
    CHECK(transform(E, S).P == qpoly({0, 0, 0, 1}).substitute_linear(1, kelem(rat(7, 3))));

    /* y = y' + x */
    auto Y = eq_transform::diagonal(1, 1, 0, 1, qpoly({0, 1}));
    weierstrass_eq E3 = transform(E, Y);
    CHECK(E3.Q == qpoly({1, 2}));
    CHECK(E3.P == qpoly({0, -1, -1, 1}));

    CHECK_THROWS_AS(eq_transform::diagonal(1, 0, 0, 1, poly()), error);
}

TEST_CASE("transformation law is exact")
{
    std::mt19937_64 rng(2024);
    for (long d : {0L, -7L}) {
        field_spec f = K(d);
        for (int it = 0; it < 200; ++it) {
            int g = 1 + it % 3;
            weierstrass_eq E = random_eq(rng, f, g);
            eq_transform T = random_transform(rng, f, g);
            weierstrass_eq E2 = transform(E, T);
            CHECK(discriminant(E2) == law_factor(T, g) * discriminant(E));
        }
    }
}

TEST_CASE("transform is a group action")
{
    std::mt19937_64 rng(7);
    for (long d : {0L, -7L}) {
        field_spec f = K(d);
        for (int it = 0; it < 60; ++it) {
            int g = 1 + it % 3;
            weierstrass_eq E = random_eq(rng, f, g);
            eq_transform T1 = random_transform(rng, f, g), T2 = random_transform(rng, f, g);
            CHECK(transform(E, compose(T1, T2)) == transform(transform(E, T2), T1));
            CHECK(transform(E, compose(inverse(T1), T1)) == E);
            CHECK(compose(T1, inverse(T1)) == eq_transform::identity(g));
            eq_transform T3 = random_transform(rng, f, g);
            CHECK(compose(compose(T1, T2), T3) == compose(T1, compose(T2, T3)));
        }
    }
}

TEST_CASE("diagonal transforms substitute directly")
{
    std::mt19937_64 rng(99);
    field_spec f = K(-7);
    for (int it = 0; it < 30; ++it) {
        int g = 1 + it % 2;
        weierstrass_eq E = random_eq(rng, f, g);
        kelem a = random_nonzero(rng, f, 3), r = random_elem(rng, f, 3), b = random_nonzero(rng, f, 3);
        poly h = random_poly(rng, f, g + 1, 2);
        weierstrass_eq E2 = transform(E, eq_transform::diagonal(g, a, r, b, h));
        /* (b y' + h)^2 + Q (b y' + h) = P at x = a x' + r */
        poly hs = h.substitute_linear(a, r), Qs = E.Q.substitute_linear(a, r), Ps = E.P.substitute_linear(a, r);
        kelem ib = kelem(1) / b;
        CHECK(E2.Q == (Qs + hs * kelem(2)) * ib);
        CHECK(E2.P == (Ps - hs * hs - Qs * hs) * (ib * ib));
    }
}

TEST_CASE("quadratic twists")
{
    weierstrass_eq E(K(0), 1, qpoly({1, 0, 0, 1}), poly(), true);
    CHECK(quadratic_twist(E, 1) == E);
    weierstrass_eq M = quadratic_twist(E, -1);
    CHECK(M.P == qpoly({-1, 0, 0, 1}));
    CHECK(M.pointed);
    weierstrass_eq T4 = quadratic_twist(E, 4);
    CHECK(T4.P == qpoly({64, 0, 0, 1}));
    /* X = 4 x, Y = 8 y takes the square twist back to E */
    CHECK(transform(T4, eq_transform::diagonal(1, 4, 0, 8, poly())) == E);
    try {
        quadratic_twist(E, 0);
        FAIL("expected ZeroTwist");
    } catch (error const & e) {
        CHECK(e.code() == errc::zero_twist);
    }
    CHECK_THROWS_AS(quadratic_twist(weierstrass_eq(K(0), 1, qpoly({0, 0, 0, 1}), qpoly({1})), 2), error);

    std::mt19937_64 rng(5);
    for (long d : {0L, -7L}) {
        field_spec f = K(d);
        for (int it = 0; it < 20; ++it) {
            int g = 1 + it % 3;
            poly P = random_poly(rng, f, 2 * g, 4) + poly::monomial(1, 2 * g + 1);
            weierstrass_eq Ep(f, g, P, poly(), true);
            kelem delta = random_nonzero(rng, f, 3);
            weierstrass_eq twice = quadratic_twist(quadratic_twist(Ep, delta), delta);
            CHECK(twice == quadratic_twist(Ep, delta * delta));
            kelem const a = delta * delta, b = pow(delta, static_cast<long>(2 * g + 1));
            CHECK(transform(twice, eq_transform::diagonal(g, a, 0, b, poly())) == Ep);
        }
    }
}

TEST_CASE("power covers")
{
    weierstrass_eq E0(K(0), 1, qpoly({1, 1, 0, 0, 1}), poly());
    CHECK(power_cover(E0, 1, 1) == E0);
    weierstrass_eq E2 = power_cover(E0, 2, 1);
    CHECK(E2.genus == 3);
    CHECK(E2.P == qpoly({1, 0, 1, 0, 0, 0, 0, 0, 1}));
    kelem const d0 = discriminant(E0);
    kelem const d2 = discriminant(E2);
    kelem const want = kelem(16 * 256) * d0 * d0;
    CHECK((d2 == want || d2 == -want));

    try {
        power_cover(weierstrass_eq(K(0), 1, qpoly({0, 0, 0, 1}), qpoly({1})), 2, 1);
        FAIL("expected RamifiedAtZeroOrInfinity");
    } catch (error const & e) {
        CHECK(e.code() == errc::ramified_at_zero_or_infinity);
    }

    std::mt19937_64 rng(31);
    for (long d : {0L, -7L}) {
        field_spec f = K(d);
        for (int g0 : {1, 2}) {
            for (int dd : {2, 3}) {
                for (long alpha : {1L, 2L, -3L}) {
                    weierstrass_eq Eb;
                    binary_form F;
                    do {
                        Eb = random_eq(rng, f, g0);
                        F = Eb.F_form();
                    } while (F.coeffs.front().is_zero() || F.coeffs.back().is_zero());
                    weierstrass_eq Ed = power_cover(Eb, dd, alpha);
                    int const g = dd * (g0 + 1) - 1;
                    CHECK(validate(Ed).genus == g);
                    long const n0 = 2 * g0 + 2;
                    kelem rhs = pow(F.coeffs.front() * F.coeffs.back(), static_cast<long>(dd - 1))
                                * pow(kelem(alpha), n0 * (n0 * dd - 1)) * pow(kelem(dd), 2L * g + 2)
                                * pow(discriminant(Eb), static_cast<long>(dd));
                    kelem lhs = discriminant(Ed);
                    CHECK((lhs == rhs || lhs == -rhs));
                }
            }
        }
    }
}
