#ifndef WEIER_EQUATION_HPP
#define WEIER_EQUATION_HPP

#include "weier/poly.hpp"

namespace weier {

/* y^2 + Q(x) y = P(x) over Q or an imaginary quadratic field, with
 * deg P <= 2g + 2 and deg Q <= g + 1.  A pointed equation additionally has
 * P monic of degree 2g + 1 and deg Q <= g. */
struct weierstrass_eq
{
    field_spec field;
    int genus = 1;
    poly P, Q;
    bool pointed = false;

    weierstrass_eq() = default;
    weierstrass_eq(field_spec f, int g, poly p, poly q, bool is_pointed = false);

    /* forms of degree 2g + 2 and g + 1 */
    binary_form P_form() const { return binary_form::from_poly(P, 2 * genus + 2); }
    binary_form Q_form() const { return binary_form::from_poly(Q, genus + 1); }
    /* 4P + Q^2 at degree 2g + 2 */
    binary_form F_form() const;

    static weierstrass_eq from_forms(field_spec f, binary_form const & P, binary_form const & Q, bool pointed = false);

    /* the pointed shape, checked structurally */
    bool has_pointed_shape() const;
    bool operator==(weierstrass_eq const &) const = default;
};

struct validation_report
{
    int genus = 0;
    int deg_F = 0;
    bool ramified_at_infinity = false;
    /* z^2 + t^{g+1} Q(1/t) z = t^{2g+2} P(1/t) */
    weierstrass_eq infinity_chart;
};

/* throws SingularGenericFiber, DegreeViolation, FieldMismatch */
validation_report validate(weierstrass_eq const & E);

/* 2^{-4(g+1)} disc(4P + Q^2 at degree 2g + 2) */
kelem discriminant(weierstrass_eq const & E);

/* u = (a x + b)/(c x + d), z = (e y + H(x))/(c x + d)^{g+1}, H a form of
 * degree g + 1.  Composition follows function composition:
 * transform(E, compose(T1, T2)) = transform(transform(E, T2), T1). */
struct eq_transform
{
    mat2 m;
    kelem e = 1;
    binary_form H;

    static eq_transform identity(int g);
    /* x = a x' + r, y = b y' + h(x) */
    static eq_transform diagonal(int g, kelem const & a, kelem const & r, kelem const & b, poly const & h);

    int genus() const { return H.degree - 1; }
    bool operator==(eq_transform const &) const = default;
};

eq_transform compose(eq_transform const & T1, eq_transform const & T2);
eq_transform inverse(eq_transform const & T);
weierstrass_eq transform(weierstrass_eq const & E, eq_transform const & T);

/* Y^2 = sum delta^{2g+1-i} p_i X^i for a pointed E with Q = 0 */
weierstrass_eq quadratic_twist(weierstrass_eq const & E, kelem const & delta);

/* y^2 + Q(alpha x^d) y = P(alpha x^d), of genus d(g0 + 1) - 1 */
weierstrass_eq power_cover(weierstrass_eq const & E0, int d, kelem const & alpha);

} // namespace weier

#endif /* WEIER_EQUATION_HPP */
