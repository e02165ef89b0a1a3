#include "weier/poly.hpp"
#include "weier/error.hpp"

#include <algorithm>
#include <utility>

namespace weier {

void poly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

poly::poly(std::vector<kelem> coeffs) : c_(std::move(coeffs)) { trim(); }

poly::poly(kelem const & constant)
{
    if (!constant.is_zero()) c_.push_back(constant);
}

poly poly::x() { return poly(std::vector<kelem>{kelem(0), kelem(1)}); }

poly poly::monomial(kelem const & coeff, int deg)
{
    std::vector<kelem> c(deg + 1);
    c[deg] = coeff;
    return poly(std::move(c));
}

kelem poly::coeff(int i) const
{
    if (i < 0 || i > degree()) return kelem();
    return c_[i];
}

void poly::set_coeff(int i, kelem const & v)
{
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1);
    c_[i] = v;
    trim();
}

long poly::field_d() const
{
    long d = 0;
    for (auto const & x : c_)
        if (!x.is_rational()) d = common_field(d, x.d);
    return d;
}

poly poly::operator-() const
{
    poly r = *this;
    for (auto & x : r.c_) x = -x;
    return r;
}

poly & poly::operator+=(poly const & o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

poly & poly::operator-=(poly const & o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

poly & poly::operator*=(poly const & o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<kelem> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

poly & poly::operator*=(kelem const & s)
{
    for (auto & x : c_) x *= s;
    trim();
    return *this;
}

poly operator+(poly x, poly const & y) { return x += y; }
poly operator-(poly x, poly const & y) { return x -= y; }
poly operator*(poly x, poly const & y) { return x *= y; }
poly operator*(poly x, kelem const & s) { return x *= s; }
poly operator*(kelem const & s, poly x) { return x *= s; }

poly pow(poly const & p, int e)
{
    poly r(kelem(1));
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

poly poly::derivative() const
{
    std::vector<kelem> r;
    for (int i = 1; i <= degree(); ++i) r.push_back(c_[i] * kelem(i));
    return poly(std::move(r));
}

kelem poly::operator()(kelem const & at) const
{
    kelem r;
    for (int i = degree(); i >= 0; --i) {
        r *= at;
        r += c_[i];
    }
    return r;
}

poly poly::substitute_linear(kelem const & a, kelem const & r) const
{
    return compose(poly(std::vector<kelem>{r, a}));
}

poly poly::compose(poly const & q) const
{
    poly r;
    for (int i = degree(); i >= 0; --i) {
        r *= q;
        r += poly(c_[i]);
    }
    return r;
}

namespace {

/* Gaussian elimination over the field; the matrix is consumed. */
kelem determinant(std::vector<std::vector<kelem>> m)
{
    size_t const n = m.size();
    kelem det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return kelem();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        kelem inv = kelem(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            kelem f = m[r][col] * inv;
            for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

} // namespace

kelem resultant(poly const & f, poly const & g)
{
    if (f.is_zero() || g.is_zero()) throw error(errc::zero_polynomial, "resultant of zero polynomial");
    int const m = f.degree();
    int const n = g.degree();
    if (m == 0) return pow(f.leading(), static_cast<long>(n));
    if (n == 0) return pow(g.leading(), static_cast<long>(m));
    int const size = m + n;
    std::vector<std::vector<kelem>> syl(size, std::vector<kelem>(size));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) syl[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) syl[n + r][r + i] = g.coeff(n - i);
    return determinant(std::move(syl));
}

mat2 mat2::operator*(mat2 const & o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

mat2 mat2::inverse() const
{
    kelem dt = det();
    if (dt.is_zero()) throw error(errc::singular_matrix, "inverse of singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

binary_form::binary_form(int n, std::vector<kelem> cs) : degree(n), coeffs(std::move(cs))
{
    if (n < 0) throw error(errc::degree_violation, "negative form degree");
    if (static_cast<int>(coeffs.size()) > n + 1) {
        for (size_t i = n + 1; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero()) throw error(errc::degree_violation, "form coefficient beyond nominal degree");
    }
    coeffs.resize(n + 1);
}

binary_form binary_form::from_poly(poly const & p, int n)
{
    if (p.degree() > n) throw error(errc::degree_violation, "polynomial degree exceeds form degree");
    return binary_form(n, p.coeffs());
}

bool binary_form::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](kelem const & x) { return x.is_zero(); });
}

binary_form binary_form::scaled(kelem const & s) const
{
    binary_form r = *this;
    for (auto & x : r.coeffs) x *= s;
    return r;
}

binary_form act_on_form(binary_form const & B, mat2 const & M)
{
    if (M.det().is_zero()) throw error(errc::singular_matrix, "act_on_form with singular matrix");
    int const n = B.degree;
    /* X -> aX + bZ and Z -> cX + dZ, written as polynomials in X with Z = 1 */
    poly const lx(std::vector<kelem>{M.b, M.a});
    poly const lz(std::vector<kelem>{M.d, M.c});
    std::vector<poly> px(n + 1), pz(n + 1);
    px[0] = pz[0] = poly(kelem(1));
    for (int i = 1; i <= n; ++i) {
        px[i] = px[i - 1] * lx;
        pz[i] = pz[i - 1] * lz;
    }
    poly acc;
    for (int i = 0; i <= n; ++i) {
        if (B.coeffs[i].is_zero()) continue;
        acc += px[i] * pz[n - i] * B.coeffs[i];
    }
    std::vector<kelem> c = acc.coeffs();
    c.resize(n + 1);
    return binary_form(n, std::move(c));
}

kelem disc_form(binary_form const & B)
{
    if (B.is_zero()) throw error(errc::zero_form, "discriminant of the zero form");
    int const n = B.degree;
    binary_form work = B;
    if (work.coeffs[n].is_zero()) {
        /* shear Z -> tX + Z with the smallest t making B(1, t) non-zero */
        for (long t = 1;; ++t) {
            kelem top;
            kelem tp(1);
            for (int i = n; i >= 0; --i) {
                top += B.coeffs[i] * tp;
                tp *= kelem(t);
            }
            if (!top.is_zero()) {
                work = act_on_form(B, mat2{1, 0, t, 1});
                break;
            }
        }
    }
    poly f = work.to_poly();
    kelem r = resultant(f, f.derivative()) / f.leading();
    if ((static_cast<long>(n) * (n - 1) / 2) % 2) r = -r;
    return r;
}

} // namespace weier
