#ifndef WEIER_FIELD_HPP
#define WEIER_FIELD_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace weier {

/* Exact rationals are GMP's mpq_class, always kept canonical. */
using rat = mpq_class;
using integer = mpz_class;

std::string rat_to_string(rat const & q);
rat rat_from_string(std::string const & s);

/* The base field: Q (d == 0) or the imaginary quadratic field Q(sqrt(d)),
 * d < 0 squarefree.  The integral basis is {1, w} with
 * w = (1+sqrt(d))/2 if d = 1 mod 4, w = sqrt(d) otherwise.
 */
struct field_spec
{
    long d = 0;

    static field_spec rationals() { return {}; }
    static field_spec imaginary_quadratic(long d);

    bool is_rational() const { return d == 0; }
    bool omega_is_half() const { return d != 0 && ((d % 4) + 4) % 4 == 1; }

    /* fundamental discriminant; 1 for Q */
    long discriminant() const;

    /* w^2 = trace_omega * w - norm_omega */
    long trace_omega() const { return omega_is_half() ? 1 : 0; }
    long norm_omega() const { return omega_is_half() ? (1 - d) / 4 : -d; }

    /* residue field degree bound for the base */
    int degree() const { return is_rational() ? 1 : 2; }

    bool operator==(field_spec const &) const = default;
};

bool is_squarefree(long n);

/* a + b w.  Elements of Q (b == 0) mix freely with elements of any field. */
struct kelem
{
    rat a;
    rat b;
    long d = 0;

    kelem() = default;
    kelem(long x) : a(x) {}
    kelem(rat const & x) : a(x) { a.canonicalize(); }
    kelem(integer const & x) : a(x) {}
    kelem(rat x, rat y, field_spec f) : a(std::move(x)), b(std::move(y)), d(f.d)
    {
        a.canonicalize();
        b.canonicalize();
        if (f.is_rational() || sgn(b) == 0) b = 0;
    }

    static kelem omega(field_spec f) { return kelem(0, 1, f); }

    field_spec field() const { return {d}; }
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }
    bool is_one() const { return a == 1 && sgn(b) == 0; }

    /* a and b both integers */
    bool is_integral() const;
    /* least positive integer m with m * this integral */
    integer denominator() const;

    kelem conj() const;
    rat norm() const;
    rat trace() const;

    kelem operator-() const;
    kelem & operator+=(kelem const & o);
    kelem & operator-=(kelem const & o);
    kelem & operator*=(kelem const & o);
    kelem & operator/=(kelem const & o);

    bool operator==(kelem const & o) const;
};

kelem operator+(kelem x, kelem const & y);
kelem operator-(kelem x, kelem const & y);
kelem operator*(kelem x, kelem const & y);
kelem operator/(kelem x, kelem const & y);
kelem pow(kelem const & x, long e);

std::string to_string(kelem const & x);
std::ostream & operator<<(std::ostream & o, kelem const & x);

/* Field common to two operands (Q is absorbed). */
long common_field(long d1, long d2);

} // namespace weier

#endif /* WEIER_FIELD_HPP */
