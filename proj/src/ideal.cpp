#include "weier/ideal.hpp"
#include "weier/error.hpp"
#include "weier/factor.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace weier {

namespace {

struct vec2
{
    integer x, y;
};

vec2 elem_mul(field_spec f, vec2 const & u, vec2 const & v)
{
    integer yy = u.y * v.y;
    return {u.x * v.x - yy * f.norm_omega(), u.x * v.y + u.y * v.x + yy * f.trace_omega()};
}

integer pos_mod(integer const & a, integer const & m)
{
    integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/* Hermite basis [a, b + c w] of the Z-lattice spanned by gens */
void hnf_of(std::vector<vec2> const & gens, integer & a, integer & b, integer & c)
{
    a = 0;
    b = 0;
    c = 0;
    for (auto const & g : gens) {
        integer x = g.x, y = g.y;
        if (y != 0) {
            if (c == 0) {
                b = x;
                c = y;
                x = 0;
            } else {
                integer gg, s, t;
                mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(), y.get_mpz_t());
                /* (y/g) * (b, c) - (c/g) * (x, y) has zero w-part */
                integer rest = (y / gg) * b - (c / gg) * x;
                integer nb = s * b + t * x;
                b = nb;
                c = gg;
                x = rest;
            }
        }
        if (x != 0) mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
    }
    if (c < 0) {
        c = -c;
        b = -b;
    }
    if (a == 0 || c == 0) throw error(errc::zero_ideal, "degenerate ideal lattice");
    b = pos_mod(b, a);
}

vec2 coords(kelem const & x, integer const & m)
{
    rat X = x.a * m, Y = x.b * m;
    return {X.get_num(), Y.get_num()};
}

} // namespace

frac_ideal frac_ideal::from_hnf(field_spec f, integer den, integer a, integer b, integer c)
{
    if (den == 0 || a == 0 || c == 0) throw error(errc::zero_ideal, "zero ideal");
    if (den < 0) den = -den;
    frac_ideal I;
    I.field = f;
    if (f.is_rational()) {
        a = abs(a);
        integer g = gcd(a, den);
        I.den = den / g;
        I.a = a / g;
        I.b = 0;
        I.c = 1;
        return I;
    }
    integer g = gcd(gcd(a, b), c);
    g = gcd(g, den);
    I.den = den / g;
    I.a = abs(a / g);
    I.c = abs(c / g);
    I.b = pos_mod(b / g, I.a);
    return I;
}

frac_ideal frac_ideal::principal(field_spec f, kelem const & x)
{
    return ideal_generated(f, {x});
}

rat frac_ideal::norm() const
{
    if (field.is_rational()) {
        rat n(a, den);
        n.canonicalize();
        return n;
    }
    rat n(a * c, den * den);
    n.canonicalize();
    return n;
}

frac_ideal ideal_generated(field_spec f, std::vector<kelem> const & gens)
{
    integer m = 1;
    bool nonzero = false;
    for (auto const & g : gens) {
        if (g.is_zero()) continue;
        nonzero = true;
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), g.denominator().get_mpz_t());
    }
    if (!nonzero) throw error(errc::zero_ideal, "ideal generated by zero");
    if (f.is_rational()) {
        integer a = 0;
        for (auto const & g : gens) {
            if (g.is_zero()) continue;
            if (!g.is_rational()) throw error(errc::field_mismatch, "quadratic generator for an ideal of Q");
            integer v = coords(g, m).x;
            mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), v.get_mpz_t());
        }
        return frac_ideal::from_hnf(f, m, a, 0, 1);
    }
    std::vector<vec2> zgens;
    vec2 const w{0, 1};
    for (auto const & g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_rational() && g.d != f.d) throw error(errc::field_mismatch, "generator outside the field");
        vec2 v = coords(g, m);
        zgens.push_back(v);
        zgens.push_back(elem_mul(f, v, w));
    }
    integer a, b, c;
    hnf_of(zgens, a, b, c);
    return frac_ideal::from_hnf(f, m, a, b, c);
}

frac_ideal ideal_product(frac_ideal const & I, frac_ideal const & J)
{
    if (!(I.field == J.field)) throw error(errc::field_mismatch, "ideal product across fields");
    field_spec f = I.field;
    if (f.is_rational()) return frac_ideal::from_hnf(f, I.den * J.den, I.a * J.a, 0, 1);
    vec2 const bi[2] = {{I.a, 0}, {I.b, I.c}};
    vec2 const bj[2] = {{J.a, 0}, {J.b, J.c}};
    std::vector<vec2> gens;
    for (auto const & u : bi)
        for (auto const & v : bj) gens.push_back(elem_mul(f, u, v));
    integer a, b, c;
    hnf_of(gens, a, b, c);
    return frac_ideal::from_hnf(f, I.den * J.den, a, b, c);
}

frac_ideal ideal_conjugate(frac_ideal const & I)
{
    field_spec f = I.field;
    if (f.is_rational()) return I;
    integer a, b, c;
    hnf_of({{I.a, 0}, {I.b + I.c * f.trace_omega(), -I.c}}, a, b, c);
    return frac_ideal::from_hnf(f, I.den, a, b, c);
}

frac_ideal ideal_inverse(frac_ideal const & I)
{
    field_spec f = I.field;
    if (f.is_rational()) return frac_ideal::from_hnf(f, I.a, I.den, 0, 1);
    frac_ideal integral = I;
    integral.den = 1;
    frac_ideal cj = ideal_conjugate(integral);
    integer n = I.a * I.c;
    return frac_ideal::from_hnf(f, n, cj.a * I.den, cj.b * I.den, cj.c * I.den);
}

frac_ideal ideal_power(frac_ideal const & I, long e)
{
    if (e < 0) return ideal_power(ideal_inverse(I), -e);
    frac_ideal r = frac_ideal::unit(I.field);
    frac_ideal base = I;
    while (e) {
        if (e & 1) r = ideal_product(r, base);
        e >>= 1;
        if (e) base = ideal_product(base, base);
    }
    return r;
}

bool ideal_contains(frac_ideal const & I, kelem const & x)
{
    if (x.is_zero()) return true;
    kelem y = x * kelem(rat(I.den));
    if (!y.is_integral()) return false;
    if (I.field.is_rational()) {
        return mpz_divisible_p(y.a.get_num_mpz_t(), I.a.get_mpz_t());
    }
    integer X = y.a.get_num(), Y = y.b.get_num();
    if (!mpz_divisible_p(Y.get_mpz_t(), I.c.get_mpz_t())) return false;
    integer q = Y / I.c;
    integer rest = X - q * I.b;
    return mpz_divisible_p(rest.get_mpz_t(), I.a.get_mpz_t());
}

char const * splitting_name(splitting s)
{
    switch (s) {
        case splitting::rational: return "rational";
        case splitting::split: return "split";
        case splitting::inert: return "inert";
        case splitting::ramified: return "ramified";
    }
    return "?";
}

integer prime_ideal::norm() const
{
    integer n;
    mpz_pow_ui(n.get_mpz_t(), p.get_mpz_t(), f);
    return n;
}

bool prime_ideal::operator<(prime_ideal const & o) const
{
    integer n1 = norm(), n2 = o.norm();
    if (p != o.p) return p < o.p;
    if (n1 != n2) return n1 < n2;
    if (ideal.b != o.ideal.b) return ideal.b < o.ideal.b;
    return ideal.c < o.ideal.c;
}

integer mod_sqrt(integer const & a0, integer const & p)
{
    integer a = pos_mod(a0, p);
    if (a == 0) return 0;
    if (p == 2) return a;
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) throw std::domain_error("mod_sqrt of a non-residue");
    integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    integer c, x, t, b, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        integer tt = t;
        while (tt != 1) {
            tt = pos_mod(tt * tt, p);
            ++i;
        }
        b = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j) b = pos_mod(b * b, p);
        x = pos_mod(x * b, p);
        c = pos_mod(b * b, p);
        t = pos_mod(t * c, p);
        m = i;
    }
    return x;
}

namespace {

prime_ideal make_prime(field_spec K, integer const & p, splitting type, integer const & r, integer const & rother)
{
    prime_ideal P;
    P.field = K;
    P.p = p;
    P.type = type;
    P.r = r;
    switch (type) {
        case splitting::inert:
            P.e = 1;
            P.f = 2;
            P.ideal = frac_ideal::from_hnf(K, 1, p, 0, p);
            P.tau = kelem(1);
            break;
        case splitting::ramified:
            P.e = 2;
            P.f = 1;
            P.ideal = frac_ideal::from_hnf(K, 1, p, -r, 1);
            P.tau = kelem::omega(K) - kelem(r);
            break;
        case splitting::split:
            P.e = 1;
            P.f = 1;
            P.ideal = frac_ideal::from_hnf(K, 1, p, -r, 1);
            P.tau = kelem::omega(K) - kelem(rother);
            break;
        case splitting::rational:
            P.ideal = frac_ideal::from_hnf(K, 1, p, 0, 1);
            P.tau = kelem(1);
            break;
    }
    return P;
}

} // namespace

std::vector<std::pair<prime_ideal, int>> factor_rational_prime(field_spec K, integer const & p)
{
    if (K.is_rational()) return {{make_prime(K, p, splitting::rational, 0, 0), 1}};
    long const D = K.discriminant();
    long const t = K.trace_omega();
    integer const n0 = K.norm_omega();
    auto minpoly = [&](integer const & x) { return pos_mod(x * x - t * x + n0, p); };

    if (mpz_divisible_p(integer(D).get_mpz_t(), p.get_mpz_t())) {
        integer r;
        if (p == 2) {
            r = (minpoly(0) == 0) ? 0 : 1;
        } else {
            integer inv2 = (p + 1) / 2;
            r = pos_mod(inv2 * t, p);
        }
        return {{make_prime(K, p, splitting::ramified, r, r), 2}};
    }
    int kr;
    if (p == 2) {
        long dm8 = ((D % 8) + 8) % 8;
        kr = (dm8 == 1 || dm8 == 7) ? 1 : -1;
    } else {
        kr = mpz_kronecker(integer(D).get_mpz_t(), p.get_mpz_t());
    }
    if (kr == -1) return {{make_prime(K, p, splitting::inert, 0, 0), 1}};
    integer r1, r2;
    if (p == 2) {
        r1 = 0;
        r2 = 1;
    } else {
        integer s = mod_sqrt(integer(D), p);
        integer inv2 = (p + 1) / 2;
        r1 = pos_mod((t + s) * inv2, p);
        r2 = pos_mod((t - s) * inv2, p);
        if (r2 < r1) std::swap(r1, r2);
    }
    return {{make_prime(K, p, splitting::split, r1, r2), 1}, {make_prime(K, p, splitting::split, r2, r1), 1}};
}

int valuation(kelem const & x, prime_ideal const & P)
{
    if (x.is_zero()) return infinite_valuation;
    if (P.field.is_rational()) return valuation(x.a, P.p);
    integer m = x.denominator();
    vec2 v = coords(x, m);
    int val = -P.e * valuation(m, P.p);
    vec2 tau = coords(P.tau, 1);
    for (;;) {
        vec2 w = (P.type == splitting::inert) ? v : elem_mul(P.field, v, tau);
        if (!mpz_divisible_p(w.x.get_mpz_t(), P.p.get_mpz_t()) || !mpz_divisible_p(w.y.get_mpz_t(), P.p.get_mpz_t()))
            break;
        mpz_divexact(v.x.get_mpz_t(), w.x.get_mpz_t(), P.p.get_mpz_t());
        mpz_divexact(v.y.get_mpz_t(), w.y.get_mpz_t(), P.p.get_mpz_t());
        ++val;
    }
    return val;
}

int ideal_valuation(frac_ideal const & I, prime_ideal const & P)
{
    if (!(I.field == P.field)) throw error(errc::field_mismatch, "valuation across fields");
    if (I.field.is_rational()) return valuation(I.a, P.p) - valuation(I.den, P.p);
    int va = valuation(kelem(rat(I.a)), P);
    int vb = valuation(kelem(rat(I.b), rat(I.c), I.field), P);
    return std::min(va, vb) - P.e * valuation(I.den, P.p);
}

std::vector<std::pair<prime_ideal, int>> factor_ideal(frac_ideal const & I)
{
    rat n = I.norm();
    std::set<integer> ps;
    for (integer const * part : {&n.get_num(), &n.get_den()}) {
        if (*part == 1) continue;
        for (auto const & [p, k] : factor_integer(*part)) ps.insert(p);
    }
    std::vector<std::pair<prime_ideal, int>> out;
    for (auto const & p : ps) {
        for (auto const & [P, e] : factor_rational_prime(I.field, p)) {
            int v = ideal_valuation(I, P);
            if (v != 0) out.emplace_back(P, v);
        }
    }
    return out;
}

frac_ideal prime_power(prime_ideal const & P, long e)
{
    return ideal_power(P.ideal, e);
}

kelem uniformizer(prime_ideal const & P)
{
    if (P.type == splitting::rational || P.type == splitting::inert) return kelem(rat(P.p));
    kelem w = kelem::omega(P.field);
    for (long k = 0;; ++k) {
        kelem cand = w - kelem(rat(P.r + k * P.p));
        if (valuation(cand, P) == 1) return cand;
    }
}

} // namespace weier
