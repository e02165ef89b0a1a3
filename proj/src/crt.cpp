#include "weier/crt.hpp"
#include "weier/error.hpp"
#include "weier/factor.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace weier {

namespace {

integer pos_mod(integer const & a, integer const & m)
{
    integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

integer ipow(integer const & p, long n)
{
    integer r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

integer inverse_mod(integer const & a, integer const & m)
{
    integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw std::domain_error("inverse_mod: not a unit");
    return r;
}

long ceil_div(long a, long b)
{
    long q = a / b;
    if ((a % b) && ((a > 0) == (b > 0))) ++q;
    return q;
}

} // namespace

integer split_root(prime_ideal const & P, int N)
{
    integer const t = P.field.trace_omega(), n0 = P.field.norm_omega();
    integer rho = P.r;
    int prec = 1;
    while (prec < N) {
        prec = std::min(2 * prec, N);
        integer mod = ipow(P.p, prec);
        integer f = rho * rho - t * rho + n0;
        integer fp = 2 * rho - t;
        rho = pos_mod(rho - f * inverse_mod(fp, mod), mod);
    }
    return pos_mod(rho, ipow(P.p, N));
}

kelem integral_rep(kelem const & alpha, prime_ideal const & P, int k)
{
    if (k <= 0 || alpha.is_zero()) return kelem();
    integer const m = alpha.denominator();
    integer X = rat(alpha.a * m).get_num(), Y = rat(alpha.b * m).get_num();
    field_spec const K = P.field;
    if (P.type == splitting::split) {
        int j = valuation(m, P.p);
        integer pj = ipow(P.p, j);
        integer mod = ipow(P.p, k + j);
        integer rho = split_root(P, k + j);
        integer z = pos_mod(X + Y * rho, mod);
        if (!mpz_divisible_p(z.get_mpz_t(), pj.get_mpz_t()))
            throw error(errc::non_integral_input, "integral_rep of a non-integral element");
        integer pk = ipow(P.p, k);
        return kelem(rat(pos_mod((z / pj) * inverse_mod(m / pj, pk), pk)));
    }
    if (mpz_divisible_p(m.get_mpz_t(), P.p.get_mpz_t()))
        throw error(errc::non_integral_input, "integral_rep of a non-integral element");
    int N = (P.type == splitting::ramified) ? (k + 1) / 2 : k;
    integer pn = ipow(P.p, N);
    integer inv = inverse_mod(m, pn);
    return kelem(rat(pos_mod(X * inv, pn)), rat(pos_mod(Y * inv, pn)), K);
}

std::pair<kelem, kelem> express_one(frac_ideal const & I, frac_ideal const & J)
{
    field_spec const K = I.field;
    if (!I.is_integral() || !J.is_integral()) throw std::domain_error("express_one: fractional input");
    struct row
    {
        integer x, y;
        std::array<integer, 4> c;
    };
    std::vector<row> rows = {
        {I.a, 0, {1, 0, 0, 0}}, {I.b, I.c, {0, 1, 0, 0}}, {J.a, 0, {0, 0, 1, 0}}, {J.b, J.c, {0, 0, 0, 1}}};
    if (K.is_rational()) {
        rows[1].y = rows[3].y = 0;
        rows[1].x = rows[3].x = 0;
    }
    auto combine = [](row const & u, row const & w, integer const & s, integer const & t) {
        row r;
        r.x = s * u.x + t * w.x;
        r.y = s * u.y + t * w.y;
        for (int i = 0; i < 4; ++i) r.c[i] = s * u.c[i] + t * w.c[i];
        return r;
    };
    /* eliminate the w-coordinate into a single pivot row */
    int piv = -1;
    for (int i = 0; i < 4; ++i) {
        if (rows[i].y == 0) continue;
        if (piv < 0) {
            piv = i;
            continue;
        }
        integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[piv].y.get_mpz_t(), rows[i].y.get_mpz_t());
        row np = combine(rows[piv], rows[i], s, t);
        row nz = combine(rows[piv], rows[i], rows[i].y / g, -(rows[piv].y / g));
        rows[piv] = np;
        rows[i] = nz;
    }
    /* gcd of the remaining rational rows */
    int acc = -1;
    for (int i = 0; i < 4; ++i) {
        if (i == piv || rows[i].x == 0) continue;
        if (acc < 0) {
            acc = i;
            continue;
        }
        integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[acc].x.get_mpz_t(), rows[i].x.get_mpz_t());
        rows[acc] = combine(rows[acc], rows[i], s, t);
        rows[i].x = 0;
    }
    if (acc < 0 || abs(rows[acc].x) != 1) throw std::domain_error("express_one: ideals are not coprime");
    row one = rows[acc];
    if (one.x < 0)
        for (auto & c : one.c) c = -c;
    kelem x = kelem(rat(one.c[0] * I.a)) + kelem(rat(one.c[1] * I.b), rat(one.c[1] * I.c), K);
    return {x, kelem(1) - x};
}

kelem crt_approximate(field_spec K, std::vector<crt_constraint> const & cons)
{
    for (size_t i = 0; i < cons.size(); ++i)
        for (size_t j = i + 1; j < cons.size(); ++j)
            if (cons[i].prime == cons[j].prime) throw error(errc::duplicate_prime, "crt: repeated prime");
    if (cons.empty()) return kelem();

    /* D = prod p^E_p makes every D * target integral at its prime */
    std::map<integer, long> E;
    for (auto const & c : cons) {
        long need = 0;
        if (!c.target.is_zero()) {
            int v = valuation(c.target, c.prime);
            if (v < 0) need = ceil_div(-v, c.prime.e);
        }
        E[c.prime.p] = std::max(E[c.prime.p], need);
    }
    integer Dint = 1;
    for (auto const & [p, e] : E) Dint *= ipow(p, e);
    kelem const D(Dint);

    std::vector<crt_constraint> integral;
    for (auto const & c : cons) {
        int k = c.k + c.prime.e * static_cast<int>(E[c.prime.p]);
        if (k <= 0) continue;
        integral.push_back({c.prime, integral_rep(c.target * D, c.prime, k), k});
    }
    for (auto const & [p, e] : E) {
        if (e == 0) continue;
        for (auto const & [Q, mult] : factor_rational_prime(K, p)) {
            bool listed = std::any_of(cons.begin(), cons.end(), [&](crt_constraint const & c) { return c.prime == Q; });
            if (!listed) integral.push_back({Q, kelem(), Q.e * static_cast<int>(e)});
        }
    }
    if (integral.empty()) return kelem();

    std::vector<frac_ideal> mods;
    for (auto const & c : integral) mods.push_back(prime_power(c.prime, c.k));
    frac_ideal total = frac_ideal::unit(K);
    for (auto const & m : mods) total = ideal_product(total, m);
    kelem r;
    for (size_t i = 0; i < integral.size(); ++i) {
        if (integral[i].target.is_zero()) continue;
        frac_ideal others = frac_ideal::unit(K);
        for (size_t j = 0; j < integral.size(); ++j)
            if (j != i) others = ideal_product(others, mods[j]);
        kelem e = express_one(mods[i], others).second;
        r += integral[i].target * e;
    }
    /* reduce modulo the product of the moduli */
    integer X = r.a.get_num(), Y = r.b.get_num();
    if (!K.is_rational()) {
        integer q;
        mpz_fdiv_q(q.get_mpz_t(), Y.get_mpz_t(), total.c.get_mpz_t());
        Y -= q * total.c;
        X -= q * total.b;
    }
    X = pos_mod(X, total.a);
    return kelem(rat(X), rat(Y), K) / D;
}

} // namespace weier
