#include "weier/equation.hpp"
#include "weier/error.hpp"

#include <algorithm>

namespace weier {

namespace {

void check_field(field_spec f, poly const & p)
{
    for (auto const & c : p.coeffs())
        if (!c.is_rational() && c.d != f.d)
            throw error(errc::field_mismatch, "coefficient " + to_string(c) + " outside the base field");
}

binary_form form_product(binary_form const & a, binary_form const & b)
{
    return binary_form::from_poly(a.to_poly() * b.to_poly(), a.degree + b.degree);
}

binary_form form_sum(binary_form a, binary_form const & b)
{
    for (int i = 0; i <= a.degree; ++i) a.coeffs[i] += b.coeffs[i];
    return a;
}

} // namespace

weierstrass_eq::weierstrass_eq(field_spec f, int g, poly p, poly q, bool is_pointed)
    : field(f), genus(g), P(std::move(p)), Q(std::move(q)), pointed(is_pointed)
{
    if (g < 1) throw error(errc::degree_violation, "genus must be at least 1");
    if (P.degree() > 2 * g + 2) throw error(errc::degree_violation, "deg P exceeds 2g+2");
    if (Q.degree() > g + 1) throw error(errc::degree_violation, "deg Q exceeds g+1");
    check_field(f, P);
    check_field(f, Q);
    if (pointed && !has_pointed_shape())
        throw error(errc::degree_violation, "pointed equation needs P monic of degree 2g+1 and deg Q <= g");
}

binary_form weierstrass_eq::F_form() const
{
    return binary_form::from_poly(P * kelem(4) + Q * Q, 2 * genus + 2);
}

weierstrass_eq weierstrass_eq::from_forms(field_spec f, binary_form const & P, binary_form const & Q, bool pointed)
{
    int const g = Q.degree - 1;
    if (P.degree != 2 * g + 2) throw error(errc::degree_violation, "form degrees do not match a genus");
    return weierstrass_eq(f, g, P.to_poly(), Q.to_poly(), pointed);
}

bool weierstrass_eq::has_pointed_shape() const
{
    return P.degree() == 2 * genus + 1 && P.leading().is_one() && Q.degree() <= genus;
}

validation_report validate(weierstrass_eq const & E)
{
    validation_report r;
    r.genus = E.genus;
    binary_form F = E.F_form();
    if (F.is_zero() || disc_form(F).is_zero())
        throw error(errc::singular_generic_fiber, "4P + Q^2 has a repeated root");
    r.deg_F = F.to_poly().degree();
    r.ramified_at_infinity = F.coeffs.back().is_zero();
    binary_form P = E.P_form(), Q = E.Q_form();
    std::reverse(P.coeffs.begin(), P.coeffs.end());
    std::reverse(Q.coeffs.begin(), Q.coeffs.end());
    r.infinity_chart = weierstrass_eq::from_forms(E.field, P, Q);
    return r;
}

kelem discriminant(weierstrass_eq const & E)
{
    binary_form F = E.F_form();
    if (F.is_zero()) throw error(errc::singular_generic_fiber, "4P + Q^2 vanishes");
    kelem d = disc_form(F);
    if (d.is_zero()) throw error(errc::singular_generic_fiber, "4P + Q^2 has a repeated root");
    return d * pow(kelem(2), -4L * (E.genus + 1));
}

eq_transform eq_transform::identity(int g)
{
    return {mat2{}, kelem(1), binary_form(g + 1, {})};
}

eq_transform eq_transform::diagonal(int g, kelem const & a, kelem const & r, kelem const & b, poly const & h)
{
    if (a.is_zero() || b.is_zero()) throw error(errc::singular_matrix, "diagonal transform with a zero scale");
    if (h.degree() > g + 1) throw error(errc::degree_violation, "shift polynomial of degree above g+1");
    kelem const ia = kelem(1) / a, ib = kelem(1) / b;
    eq_transform T;
    T.m = mat2{ia, -r * ia, 0, 1};
    T.e = ib;
    T.H = binary_form::from_poly(h * (-ib), g + 1);
    return T;
}

eq_transform compose(eq_transform const & T1, eq_transform const & T2)
{
    if (T1.H.degree != T2.H.degree) throw error(errc::degree_violation, "composing transforms of different genus");
    eq_transform T;
    T.m = T1.m * T2.m;
    T.e = T1.e * T2.e;
    T.H = form_sum(T2.H.scaled(T1.e), act_on_form(T1.H, T2.m));
    return T;
}

eq_transform inverse(eq_transform const & T)
{
    if (T.e.is_zero()) throw error(errc::singular_matrix, "transform with e = 0");
    eq_transform R;
    R.m = T.m.inverse();
    R.e = kelem(1) / T.e;
    R.H = act_on_form(T.H.scaled(-R.e), R.m);
    return R;
}

weierstrass_eq transform(weierstrass_eq const & E, eq_transform const & T)
{
    int const g = E.genus;
    if (T.H.degree != g + 1) throw error(errc::degree_violation, "transform genus does not match the equation");
    if (T.e.is_zero()) throw error(errc::singular_matrix, "transform with e = 0");
    mat2 const inv = T.m.inverse();
    binary_form const P = E.P_form(), Q = E.Q_form(), &H = T.H;
    binary_form Qp = form_sum(Q.scaled(T.e), H.scaled(kelem(-2)));
    binary_form Pp = form_sum(P.scaled(T.e * T.e), form_product(Q, H).scaled(T.e));
    Pp = form_sum(Pp, form_product(H, H).scaled(kelem(-1)));
    weierstrass_eq R = weierstrass_eq::from_forms(E.field, act_on_form(Pp, inv), act_on_form(Qp, inv));
    R.pointed = E.pointed && R.has_pointed_shape();
    return R;
}

weierstrass_eq quadratic_twist(weierstrass_eq const & E, kelem const & delta)
{
    if (delta.is_zero()) throw error(errc::zero_twist, "twist by zero");
    if (!E.has_pointed_shape() || !E.Q.is_zero())
        throw error(errc::degree_violation, "twisting needs a pointed equation with Q = 0");
    int const n = 2 * E.genus + 1;
    std::vector<kelem> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = E.P.coeff(i) * pow(delta, static_cast<long>(n - i));
    return weierstrass_eq(E.field, E.genus, poly(c), poly(), E.pointed);
}

weierstrass_eq power_cover(weierstrass_eq const & E0, int d, kelem const & alpha)
{
    if (d < 1) throw std::invalid_argument("power_cover: d must be positive");
    if (alpha.is_zero()) throw std::invalid_argument("power_cover: alpha must be non-zero");
    validate(E0);
    binary_form F = E0.F_form();
    if (F.coeffs.front().is_zero() || F.coeffs.back().is_zero())
        throw error(errc::ramified_at_zero_or_infinity, "4P + Q^2 vanishes at 0 or at infinity");
    poly const sub = poly::monomial(alpha, d);
    int const g = d * (E0.genus + 1) - 1;
    return weierstrass_eq(E0.field, g, E0.P.compose(sub), E0.Q.compose(sub));
}

} // namespace weier
