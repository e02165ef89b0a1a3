#include "doctest.h"

#include "weier/error.hpp"
#include "weier/globalmodel.hpp"

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

prime_ideal prime_over(field_spec f, long p, size_t which = 0)
{
    return factor_rational_prime(f, p).at(which).first;
}

kelem random_elem(std::mt19937_64 & rng, field_spec f, long bound)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    if (f.is_rational()) return kelem(rat(dist(rng)));
    return kelem(rat(dist(rng)), rat(dist(rng)), f);
}

kelem nonzero_elem(std::mt19937_64 & rng, field_spec f, long bound)
{
    for (;;) {
        kelem x = random_elem(rng, f, bound);
        if (!x.is_zero()) return x;
    }
}

poly random_poly(std::mt19937_64 & rng, field_spec f, int deg, long bound)
{
    std::vector<kelem> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_elem(rng, f, bound));
    return poly(c);
}

bool is_valid(weierstrass_eq const & E)
{
    try {
        validate(E);
        return true;
    } catch (error const &) {
        return false;
    }
}

weierstrass_eq random_eq(std::mt19937_64 & rng, field_spec f, int g, long bound, bool pointed)
{
    for (;;) {
        poly P = pointed ? random_poly(rng, f, 2 * g, bound) + poly::monomial(1, 2 * g + 1)
                         : random_poly(rng, f, 2 * g + 2, bound);
        poly Q = random_poly(rng, f, pointed ? g : g + 1, 1);
        weierstrass_eq E(f, g, P, Q, pointed);
        if (is_valid(E)) return E;
    }
}

/* generator of P^k, k a multiple of the order of [P] */
kelem power_generator(prime_ideal const & P, long k)
{
    auto g = principal_generator(prime_power(P, k));
    REQUIRE(g);
    return *g;
}

void check_identity(model_report const & R)
{
    int const g = R.input.genus;
    long const n = 2L * g + 1;
    frac_ideal lhs = discriminant_ideal(R.input);
    frac_ideal rhs = ideal_product(ideal_product(ideal_power(R.b, 4 * n), ideal_power(R.a, -2 * (g + 1) * n)), R.delta);
    CHECK(lhs == rhs);
}

/* the equation relating two models of the same curve is over K */
void check_synthesized(model_report const & R, weierstrass_eq const & out)
{
    CHECK(is_integral(out));
    CHECK(discriminant_ideal(out) == R.delta);
    CHECK(out.genus == R.input.genus);
}

qform pw(qform const & f, long e)
{
    return reduce(form_power(f, e));
}

} // namespace

TEST_CASE("bad primes examples")
{
    field_spec const Q = K(0);
    auto bp = bad_primes(weierstrass_eq(Q, 2, qpoly({1, 0, 0, 0, 0, 1}), poly()));
    REQUIRE(bp.size() == 2);
    CHECK(bp[0].p == 2);
    CHECK(bp[1].p == 5);

    bp = bad_primes(weierstrass_eq(Q, 1, qpoly({0, 0, 0, 1}), qpoly({1})));
    REQUIRE(bp.size() == 1);
    CHECK(bp[0].p == 3);

    /* coefficient denominators are candidates even when Delta is a unit there */
    weierstrass_eq const E(Q, 1, poly({kelem(rat(1, 7)), kelem(0), kelem(0), kelem(1)}), qpoly({1}));
    bp = bad_primes(E);
    CHECK(std::any_of(bp.begin(), bp.end(), [](prime_ideal const & P) { return P.p == 7; }));

    CHECK_THROWS_AS(bad_primes(weierstrass_eq(Q, 1, qpoly({0, 0, 1}), poly())), error);

    /* sorted by norm over a quadratic field */
    bp = bad_primes(weierstrass_eq(K(-5), 1, qpoly({1, 0, 0, 1}), poly()));
    for (size_t i = 1; i < bp.size(); ++i) CHECK(bp[i - 1].norm() <= bp[i].norm());
}

TEST_CASE("assemble examples")
{
    field_spec const Q = K(0);
    SUBCASE("y^2 = x^5 + 1")
    {
        model_report R = assemble(weierstrass_eq(Q, 2, qpoly({1, 0, 0, 0, 0, 1}), poly()));
        REQUIRE(R.locals.size() == 2);
        CHECK(R.locals[0].vdisc == 8);
        CHECK(R.locals[1].vdisc == 5);
        CHECK(R.delta == frac_ideal::principal(Q, kelem(integer(256 * 3125))));
        CHECK(R.a.is_unit());
        CHECK(R.b.is_unit());
        CHECK(is_principal_class(R.class_w));
        check_identity(R);
        /* already minimal and integral: synthesis returns an equivalent equation */
        weierstrass_eq out = synthesize(R);
        check_synthesized(R, out);
        CHECK(discriminant(out) == discriminant(R.input));
    }
    SUBCASE("y^2 + y = x^3")
    {
        model_report R = assemble(weierstrass_eq(Q, 1, qpoly({0, 0, 0, 1}), qpoly({1})));
        REQUIRE(R.locals.size() == 1);
        CHECK(R.locals[0].prime.p == 3);
        CHECK(R.locals[0].vdisc == 3);
    }
    SUBCASE("pointed y^2 = x^5 + 3^10")
    {
        weierstrass_eq E(Q, 2, qpoly({59049, 0, 0, 0, 0, 1}), poly(), true);
        model_report R = assemble(E, {.pointed = true});
        check_identity(R);
        CHECK(R.u == frac_ideal::principal(Q, kelem(rat(1, 3))));
        auto three = std::find_if(R.locals.begin(), R.locals.end(), [](local_model const & m) { return m.prime.p == 3; });
        REQUIRE(three != R.locals.end());
        CHECK(three->va == 2);
        CHECK(three->vb == 5);
        CHECK(three->vdisc == 0);
        weierstrass_eq out = synthesize(R);
        CHECK(out.pointed);
        CHECK(out.P == qpoly({1, 0, 0, 0, 0, 1}));
        CHECK(out.Q.is_zero());
    }
    SUBCASE("inconsistent pointed data")
    {
        /* a non-pointed model forced at 3 breaks a^(2g+1) = b^2 */
        weierstrass_eq E(Q, 1, qpoly({729, 0, 0, 1}), poly(), true);
        diag_change c;
        c.a = 9;
        c.b = 27;
        assemble_options opt{.pointed = true};
        opt.overrides.push_back({prime_over(Q, 3), c});
        CHECK_NOTHROW(assemble(E, opt));
        c.b = 9;
        opt.overrides[0].change = c;
        CHECK_THROWS_AS(assemble(E, opt), error);
    }
}

TEST_CASE("class of w examples")
{
    field_spec const f = K(-5);
    frac_ideal const p2 = prime_over(f, 2).ideal;
    frac_ideal const O = frac_ideal::unit(f);
    class_group const cg = compute_class_group(f);
    CHECK(is_principal_class(w_class(2, O, O)));
    qform const w = w_class(2, p2, O);
    CHECK(w == pw(class_of(p2), 3));
    CHECK(cg.order_of(w) == 2);
    /* u of order 2 in even genus: [w] = [u]^(2g) is trivial */
    CHECK(is_principal_class(pw(class_of(p2), 4)));
}

TEST_CASE("check_conditions examples")
{
    SUBCASE("class number one: every existence verdict holds")
    {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 10; ++t) {
            weierstrass_eq E = random_eq(rng, K(-7), 1 + t % 2, 3, false);
            model_report R = assemble(E);
            CHECK(R.class_number == 1);
            CHECK(R.v.exists_integral_eq);
            CHECK(R.v.thm_main_2);
            CHECK(R.v.thm_main_3);
            CHECK(R.v.thm_main_4);
            check_synthesized(R, synthesize(R));
        }
    }
    SUBCASE("hypothesis arithmetic for h = 3, g = 2")
    {
        model_report R;
        R.input = weierstrass_eq(K(-23), 2, qpoly({1, 0, 0, 0, 0, 1}), poly());
        R.a = R.b = R.delta = R.u = frac_ideal::unit(K(-23));
        R.class_a = R.class_b = R.class_w = R.class_det_omega = R.class_delta = R.class_u = principal_form(-23);
        verdicts v = check_conditions(R, compute_class_group(K(-23)));
        CHECK(v.thm_main_3);
        CHECK(v.thm_main_2);
        CHECK(v.sadek);
    }
    SUBCASE("g = 2 over Q(sqrt(-5)) with [w] of order 2")
    {
        field_spec const f = K(-5);
        model_report R;
        R.input = weierstrass_eq(f, 2, qpoly({1, 0, 0, 0, 0, 1}), poly());
        R.a = prime_over(f, 2).ideal;
        R.b = R.delta = R.u = frac_ideal::unit(f);
        R.class_a = class_of(R.a);
        R.class_b = R.class_delta = R.class_u = principal_form(-20);
        R.class_w = w_class(2, R.a, R.b);
        R.class_det_omega = det_omega_class(2, R.a, R.b);
        R.v = check_conditions(R, compute_class_group(f));
        CHECK_FALSE(R.v.w_trivial);
        CHECK_FALSE(R.v.exists_integral_eq);
        try {
            synthesize(R);
            FAIL("expected an obstruction");
        } catch (error const & e) {
            CHECK(e.code() == errc::obstruction_w_class);
        }
    }
}

TEST_CASE("nontrivial Weierstrass class over Q(sqrt(-5))")
{
    /* y^2 = x^3 + x + 9: the model x = 9 x', y = 3 y' at a prime above 3 is
     * integral and normal, with a = P^2 and b = P */
    field_spec const f = K(-5);
    weierstrass_eq const E(f, 1, qpoly({9, 1, 0, 1}), poly());
    prime_ideal const P3 = prime_over(f, 3);
    diag_change c;
    c.a = 9;
    c.b = 3;
    assemble_options opt;
    opt.overrides.push_back({P3, c});
    model_report R = assemble(E, opt);
    check_identity(R);
    CHECK(R.v.Z_is_P1);
    CHECK_FALSE(R.v.w_trivial);
    CHECK(R.class_w == class_of(P3.ideal));
    try {
        synthesize(R);
        FAIL("expected an obstruction");
    } catch (error const & e) {
        CHECK(e.code() == errc::obstruction_w_class);
    }
    /* with minimal models the same curve has an integral equation */
    model_report M = assemble(E);
    CHECK(M.v.exists_integral_eq);
}

TEST_CASE("non-square bundle obstruction")
{
    /* g = 1, a = b = P2 over Q(sqrt(-5)): [w] trivial, [a] not a square */
    field_spec const f = K(-5);
    model_report R;
    R.input = weierstrass_eq(f, 1, qpoly({1, 0, 0, 1}), poly());
    R.a = R.b = prime_over(f, 2).ideal;
    R.delta = R.u = frac_ideal::unit(f);
    R.class_a = R.class_b = class_of(R.a);
    R.class_delta = R.class_u = principal_form(-20);
    R.class_w = w_class(1, R.a, R.b);
    R.class_det_omega = det_omega_class(1, R.a, R.b);
    R.v = check_conditions(R, compute_class_group(f));
    CHECK(R.v.w_trivial);
    CHECK_FALSE(R.v.Z_is_P1);
    try {
        synthesize(R);
        FAIL("expected an obstruction");
    } catch (error const & e) {
        CHECK(e.code() == errc::obstruction_non_square_bundle);
    }
}

TEST_CASE("Moebius synthesis when a is not principal")
{
    /* y^2 = x^6 + c with (c) = P^6 forces a = P at a prime of order 3 */
    field_spec const f = K(-23);
    int moved = 0;
    for (long p : {2L, 3L}) {
        for (size_t which : {size_t(0), size_t(1)}) {
            prime_ideal const P = prime_over(f, p, which);
            kelem const c = power_generator(P, 6);
            weierstrass_eq const E(f, 2, poly({c, 0, 0, 0, 0, 0, kelem(1)}), poly());
            model_report R = assemble(E);
            check_identity(R);
            INFO("p = " << p << " which = " << which);
            CHECK(R.v.Z_is_P1);
            if (!R.v.exists_integral_eq) continue;
            weierstrass_eq out = synthesize(R);
            check_synthesized(R, out);
            if (!is_principal_class(R.class_a)) ++moved;
        }
    }
    CHECK(moved > 0);
}

TEST_CASE("sadek examples")
{
    /* y^2 = x^5 + 1 has bad reduction at 2 and 5 */
    CHECK_FALSE(sadek_check(weierstrass_eq(K(0), 2, qpoly({1, 0, 0, 0, 0, 1}), poly())));
    /* Delta_C = (3) */
    weierstrass_eq const E(K(0), 1, qpoly({0, 0, 0, 1}), qpoly({1}));
    CHECK_FALSE(sadek_check(E));
}

TEST_CASE("global invariants on random curves")
{
    std::mt19937_64 rng(2024);
    for (long d : {0L, -5L, -23L}) {
        field_spec const f = K(d);
        class_group const cg = compute_class_group(f);
        for (int t = 0; t < 12; ++t) {
            int const g = 1 + t % 2;
            bool const pointed = t % 3 == 0;
            weierstrass_eq E = random_eq(rng, f, g, 4, pointed);
            /* rescale by a random element to create non-trivial local changes;
             * x = al^2 x', y = al^(2g+1) y' keeps the pointed shape */
            kelem const al = nonzero_elem(rng, f, 3);
            if (pointed) {
                E = transform(E, eq_transform::diagonal(g, pow(al, 2L), 0, pow(al, 2L * g + 1), poly()));
                E.pointed = true;
            } else {
                E = transform(E, eq_transform::diagonal(g, al, random_elem(rng, f, 2), nonzero_elem(rng, f, 3),
                                                        random_poly(rng, f, 1, 2)));
            }
            INFO("d = " << d << " t = " << t);
            model_report R = assemble(E, {.pointed = pointed});
            check_identity(R);
            long const n = 2L * g + 1;

            /* discriminant and det omega in terms of [w] */
            if (g % 2 == 0) {
                CHECK(R.class_delta == pw(R.class_w, 2 * n));
                CHECK(R.class_det_omega == pw(R.class_w, -g / 2));
            } else {
                CHECK(R.class_delta == pw(R.class_w, 4 * n));
                CHECK(R.class_det_omega == pw(R.class_w, -g));
            }
            long const e = g == 1 ? -12 : -10;
            CHECK(R.class_delta == pw(R.class_det_omega, e));

            if (pointed) {
                CHECK(R.class_delta == pw(R.class_u, 4L * g * n));
                CHECK(R.class_det_omega == pw(R.class_u, -static_cast<long>(g) * g));
                CHECK(pointed_class(R) == R.class_u);
                CHECK(R.v.Z_is_P1);
                for (auto const & m : R.locals) CHECK(n * m.va == 2 * m.vb);
            }

            /* any hypothesis of the main theorem gives an integral equation */
            bool const thm = R.v.thm_main_1a || R.v.thm_main_1b || R.v.thm_main_2 || R.v.thm_main_3 || R.v.thm_main_4;
            if (thm) CHECK(R.v.exists_integral_eq);
            CHECK(R.v.Z_is_P1 == cg.is_square(R.class_a));

            if (R.v.exists_integral_eq) check_synthesized(R, synthesize(R));

            /* serial and parallel local work agree */
            model_report S = assemble(E, {.pointed = pointed, .parallel = false});
            CHECK(S.delta == R.delta);
            CHECK(S.a == R.a);
            CHECK(S.b == R.b);
        }
    }
}

TEST_CASE("transform invariance")
{
    std::mt19937_64 rng(99);
    for (long d : {0L, -5L, -23L}) {
        field_spec const f = K(d);
        for (int t = 0; t < 6; ++t) {
            int const g = 1 + t % 2;
            weierstrass_eq const E = random_eq(rng, f, g, 3, false);
            /* unit determinant ideal: x' = (x + s) / (t x + 1 + s t) */
            kelem const s = random_elem(rng, f, 2), u = random_elem(rng, f, 2);
            eq_transform T = eq_transform::identity(g);
            T.m = mat2{1, s, u, 1 + s * u};
            T.e = 1;
            T.H = binary_form::from_poly(random_poly(rng, f, 1, 2), g + 1);
            weierstrass_eq const E2 = transform(E, T);
            INFO("d = " << d << " t = " << t);
            model_report R1 = assemble(E), R2 = assemble(E2);
            CHECK(R1.class_w == R2.class_w);
            CHECK(R1.class_delta == R2.class_delta);
            CHECK(R1.class_det_omega == R2.class_det_omega);
            CHECK(R1.delta == R2.delta);
        }
    }
}

TEST_CASE("relocalize keeps the model")
{
    std::mt19937_64 rng(5);
    field_spec const f = K(-5);
    for (int t = 0; t < 10; ++t) {
        weierstrass_eq const E = random_eq(rng, f, 1 + t % 2, 4, false);
        model_report R = assemble(E);
        eq_transform T = eq_transform::identity(E.genus);
        T.m = mat2{0, nonzero_elem(rng, f, 3), 1, random_elem(rng, f, 3)};
        for (auto const & m : R.locals) {
            local_model n = relocalize(E, T, m);
            CHECK(n.vdisc == m.vdisc);
        }
    }
}
