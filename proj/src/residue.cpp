#include "weier/residue.hpp"
#include "weier/crt.hpp"
#include "weier/error.hpp"

#include <algorithm>

namespace weier {

namespace {

integer pos_mod(integer const & a, integer const & m)
{
    integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

residue_field::residue_field(prime_ideal const & P) : P_(P), p_(P.p)
{
    t_ = P.field.trace_omega();
    n0_ = pos_mod(integer(P.field.norm_omega()), p_);
    q_ = P.f == 2 ? p_ * p_ : p_;
}

residue_field::elt residue_field::add(elt const & x, elt const & y) const
{
    return {pos_mod(x.u + y.u, p_), pos_mod(x.v + y.v, p_)};
}

residue_field::elt residue_field::sub(elt const & x, elt const & y) const
{
    return {pos_mod(x.u - y.u, p_), pos_mod(x.v - y.v, p_)};
}

residue_field::elt residue_field::neg(elt const & x) const
{
    return {pos_mod(-x.u, p_), pos_mod(-x.v, p_)};
}

residue_field::elt residue_field::mul(elt const & x, elt const & y) const
{
    if (P_.f == 1) return {pos_mod(x.u * y.u, p_), 0};
    integer vv = x.v * y.v;
    return {pos_mod(x.u * y.u - n0_ * vv, p_), pos_mod(x.u * y.v + x.v * y.u + t_ * vv, p_)};
}

residue_field::elt residue_field::pow(elt x, integer e) const
{
    elt r = one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, x);
        e /= 2;
        if (e > 0) x = mul(x, x);
    }
    return r;
}

residue_field::elt residue_field::inv(elt const & x) const
{
    if (is_zero(x)) throw std::domain_error("residue field: inverse of zero");
    return pow(x, q_ - 2);
}

std::optional<residue_field::elt> residue_field::sqrt(elt const & x) const
{
    if (is_zero(x)) return zero();
    if (p_ == 2) return pow(x, q_ / 2);
    if (!(pow(x, (q_ - 1) / 2) == one())) return std::nullopt;
    /* Tonelli-Shanks in F_q */
    integer Q = q_ - 1;
    long s = 0;
    while (mpz_even_p(Q.get_mpz_t())) {
        Q /= 2;
        ++s;
    }
    elt z;
    for (integer i = 2;; ++i) {
        z = element(i);
        if (!(pow(z, (q_ - 1) / 2) == one())) break;
    }
    elt c = pow(z, Q);
    elt r = pow(x, (Q + 1) / 2);
    elt t = pow(x, Q);
    long m = s;
    while (!(t == one())) {
        long i = 0;
        elt tt = t;
        while (!(tt == one())) {
            tt = mul(tt, tt);
            ++i;
        }
        elt b = c;
        for (long j = 0; j + 1 < m - i; ++j) b = mul(b, b);
        r = mul(r, b);
        c = mul(b, b);
        t = mul(t, c);
        m = i;
    }
    return r;
}

residue_field::elt residue_field::element(integer const & i) const
{
    if (P_.f == 1) return {i, 0};
    return {pos_mod(i, p_), i / p_};
}

residue_field::elt residue_field::reduce(kelem const & x) const
{
    if (x.is_zero()) return zero();
    kelem b = integral_rep(x, P_, 1);
    integer X = b.a.get_num(), Y = b.b.get_num();
    if (P_.f == 2) return {pos_mod(X, p_), pos_mod(Y, p_)};
    return {pos_mod(X + Y * P_.r, p_), 0};
}

kelem residue_field::lift(elt const & x) const
{
    if (P_.f == 1) return kelem(rat(x.u));
    return kelem(rat(x.u), rat(x.v), P_.field);
}

void residue_field::trim(rpoly & f) const
{
    while (!f.empty() && is_zero(f.back())) f.pop_back();
}

residue_field::rpoly residue_field::reduce(std::vector<kelem> const & coeffs) const
{
    rpoly f;
    for (auto const & c : coeffs) f.push_back(reduce(c));
    trim(f);
    return f;
}

residue_field::elt residue_field::eval(rpoly const & f, elt const & x) const
{
    elt r;
    for (size_t i = f.size(); i-- > 0;) r = add(mul(r, x), f[i]);
    return r;
}

residue_field::rpoly residue_field::poly_mul(rpoly const & f, rpoly const & g) const
{
    if (f.empty() || g.empty()) return {};
    rpoly r(f.size() + g.size() - 1);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) r[i + j] = add(r[i + j], mul(f[i], g[j]));
    trim(r);
    return r;
}

residue_field::rpoly residue_field::poly_sub(rpoly const & f, rpoly const & g) const
{
    rpoly r(std::max(f.size(), g.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        elt a = i < f.size() ? f[i] : zero();
        elt b = i < g.size() ? g[i] : zero();
        r[i] = sub(a, b);
    }
    trim(r);
    return r;
}

residue_field::rpoly residue_field::poly_mod(rpoly f, rpoly const & g) const
{
    if (g.empty()) throw std::domain_error("poly_mod by zero");
    elt const lc_inv = inv(g.back());
    trim(f);
    while (f.size() >= g.size()) {
        elt c = mul(f.back(), lc_inv);
        size_t shift = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) f[shift + i] = sub(f[shift + i], mul(c, g[i]));
        trim(f);
    }
    return f;
}

residue_field::rpoly residue_field::poly_div_linear(rpoly const & f, elt const & r) const
{
    /* synthetic division by (x - r), remainder dropped */
    if (f.size() <= 1) return {};
    rpoly q(f.size() - 1);
    elt acc;
    for (size_t i = f.size(); i-- > 1;) {
        acc = add(mul(acc, r), f[i]);
        q[i - 1] = acc;
    }
    trim(q);
    return q;
}

residue_field::rpoly residue_field::poly_gcd(rpoly f, rpoly g) const
{
    trim(f);
    trim(g);
    while (!g.empty()) {
        rpoly r = poly_mod(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.empty()) {
        elt c = inv(f.back());
        for (auto & x : f) x = mul(x, c);
    }
    return f;
}

residue_field::rpoly residue_field::poly_powmod(rpoly const & f, integer e, rpoly const & m) const
{
    rpoly r{one()};
    r = poly_mod(r, m);
    rpoly base = poly_mod(f, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(poly_mul(r, base), m);
        e /= 2;
        if (e > 0) base = poly_mod(poly_mul(base, base), m);
    }
    return r;
}

std::vector<residue_field::elt> residue_field::roots(rpoly f) const
{
    trim(f);
    if (f.empty()) throw error(errc::zero_polynomial, "roots of the zero polynomial");
    std::vector<elt> out;
    if (f.size() == 1) return out;
    if (q_ <= 1024) {
        for (integer i = 0; i < q_; ++i) {
            elt x = element(i);
            if (is_zero(eval(f, x))) out.push_back(x);
        }
        return out;
    }
    /* g = gcd(f, x^q - x) is the product of the distinct linear factors */
    rpoly x{zero(), one()};
    rpoly g = poly_gcd(f, poly_sub(poly_powmod(x, q_, f), x));
    std::vector<rpoly> todo{g};
    integer shift = 0;
    while (!todo.empty()) {
        rpoly h = todo.back();
        todo.pop_back();
        if (h.size() <= 1) continue;
        if (h.size() == 2) {
            out.push_back(neg(mul(h[0], inv(h[1]))));
            continue;
        }
        /* Cantor-Zassenhaus with deterministic shifts x + a */
        for (;;) {
            ++shift;
            rpoly xa{element(shift), one()};
            rpoly w = poly_powmod(xa, (q_ - 1) / 2, h);
            w = poly_sub(w, rpoly{one()});
            rpoly d = poly_gcd(h, w);
            if (d.size() > 1 && d.size() < h.size()) {
                /* h / d by exact division */
                rpoly quo;
                {
                    rpoly num = h;
                    quo.assign(num.size() - d.size() + 1, zero());
                    elt lc_inv = inv(d.back());
                    while (num.size() >= d.size()) {
                        elt c = mul(num.back(), lc_inv);
                        size_t s = num.size() - d.size();
                        quo[s] = c;
                        for (size_t i = 0; i < d.size(); ++i) num[s + i] = sub(num[s + i], mul(c, d[i]));
                        trim(num);
                    }
                    trim(quo);
                }
                todo.push_back(d);
                todo.push_back(quo);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](elt const & a, elt const & b) {
        return a.v != b.v ? a.v < b.v : a.u < b.u;
    });
    return out;
}

int residue_field::multiplicity(rpoly f, elt const & r) const
{
    trim(f);
    if (f.empty()) throw error(errc::zero_polynomial, "multiplicity in the zero polynomial");
    int m = 0;
    while (f.size() > 1 && is_zero(eval(f, r))) {
        f = poly_div_linear(f, r);
        ++m;
    }
    return m;
}

} // namespace weier
