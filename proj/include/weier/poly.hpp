#ifndef WEIER_POLY_HPP
#define WEIER_POLY_HPP

#include "weier/field.hpp"

#include <vector>

namespace weier {

/* Dense univariate polynomial over Q or an imaginary quadratic field,
 * coefficient of x^i at index i, no trailing zeros.
 */
class poly
{
    std::vector<kelem> c_;

    void trim();

    public:
    poly() = default;
    explicit poly(std::vector<kelem> coeffs);
    poly(kelem const & constant);

    static poly x();
    static poly monomial(kelem const & coeff, int deg);

    /* -1 for the zero polynomial */
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::vector<kelem> const & coeffs() const { return c_; }

    /* zero beyond the degree */
    kelem coeff(int i) const;
    kelem leading() const { return is_zero() ? kelem() : c_.back(); }
    void set_coeff(int i, kelem const & v);

    /* the field the coefficients live in (0 when all rational) */
    long field_d() const;

    poly operator-() const;
    poly & operator+=(poly const & o);
    poly & operator-=(poly const & o);
    poly & operator*=(poly const & o);
    poly & operator*=(kelem const & s);

    bool operator==(poly const & o) const { return c_ == o.c_; }

    poly derivative() const;
    kelem operator()(kelem const & at) const;

    /* p(a x + r) */
    poly substitute_linear(kelem const & a, kelem const & r) const;
    /* p(q(x)) */
    poly compose(poly const & q) const;
};

poly operator+(poly x, poly const & y);
poly operator-(poly x, poly const & y);
poly operator*(poly x, poly const & y);
poly operator*(poly x, kelem const & s);
poly operator*(kelem const & s, poly x);
poly pow(poly const & p, int e);

/* Sylvester resultant with respect to the exact degrees. */
kelem resultant(poly const & f, poly const & g);

struct mat2
{
    kelem a = 1, b = 0, c = 0, d = 1;

    kelem det() const { return a * d - b * c; }
    mat2 operator*(mat2 const & o) const;
    mat2 inverse() const;
    bool operator==(mat2 const &) const = default;
};

/* A binary form of nominal degree n: coefficient of X^i Z^(n-i) at index i.
 * Vanishing top coefficients are allowed (roots at infinity).
 */
struct binary_form
{
    int degree = 0;
    std::vector<kelem> coeffs;

    binary_form() = default;
    binary_form(int n, std::vector<kelem> cs);
    /* the polynomial p embedded at nominal degree n >= deg p */
    static binary_form from_poly(poly const & p, int n);

    poly to_poly() const { return poly(coeffs); }
    bool is_zero() const;
    binary_form scaled(kelem const & s) const;
    bool operator==(binary_form const &) const = default;
};

/* B(aX + bZ, cX + dZ) */
binary_form act_on_form(binary_form const & B, mat2 const & M);

/* SL2-invariant discriminant normalized as
 * (-1)^(n(n-1)/2) res(f, f') / a_n when the top coefficient is non-zero. */
kelem disc_form(binary_form const & B);

} // namespace weier

#endif /* WEIER_POLY_HPP */
