#ifndef WEIER_IDEAL_HPP
#define WEIER_IDEAL_HPP

#include "weier/field.hpp"

#include <limits>
#include <utility>
#include <vector>

namespace weier {

/* Fractional ideal (1/den) * J, J integral with Z-basis [a, b + c w] in
 * Hermite normal form: a, c > 0, c | a, c | b, 0 <= b < a.  The
 * representation is canonical (den minimal).
 *
 * Over Q the ideal is (a/den) Z, stored with b = 0, c = 1.
 */
struct frac_ideal
{
    field_spec field;
    integer den = 1;
    integer a = 1, b = 0, c = 1;

    static frac_ideal unit(field_spec f) { return frac_ideal{f, 1, 1, 0, 1}; }
    static frac_ideal principal(field_spec f, kelem const & x);
    /* canonicalizes; throws ZeroIdeal on a zero lattice */
    static frac_ideal from_hnf(field_spec f, integer den, integer a, integer b, integer c);

    bool is_integral() const { return den == 1; }
    bool is_unit() const { return den == 1 && a == 1 && c == 1; }
    rat norm() const;

    bool operator==(frac_ideal const &) const = default;
};

frac_ideal ideal_product(frac_ideal const & I, frac_ideal const & J);
frac_ideal ideal_inverse(frac_ideal const & I);
frac_ideal ideal_power(frac_ideal const & I, long e);
/* the ideal generated by a list of elements (not all zero) */
frac_ideal ideal_generated(field_spec f, std::vector<kelem> const & gens);
bool ideal_contains(frac_ideal const & I, kelem const & x);
frac_ideal ideal_conjugate(frac_ideal const & I);

enum class splitting { rational, split, inert, ramified };

struct prime_ideal
{
    field_spec field;
    integer p;
    splitting type = splitting::rational;
    int e = 1;
    int f = 1;
    /* root of the minimal polynomial of w mod p defining (p, w - r);
     * unused for inert primes */
    integer r = 0;
    frac_ideal ideal;
    /* tau in p * P^{-1} \ pO: multiplying by tau/p lowers v_P by one */
    kelem tau;

    integer norm() const;
    bool operator==(prime_ideal const & o) const { return field == o.field && ideal == o.ideal; }
    bool operator<(prime_ideal const & o) const;
};

char const * splitting_name(splitting s);

/* (p) = prod P^e, primes above p ordered by root r */
std::vector<std::pair<prime_ideal, int>> factor_rational_prime(field_spec K, integer const & p);

constexpr int infinite_valuation = std::numeric_limits<int>::max();

/* v_P(x), infinite_valuation for x = 0 */
int valuation(kelem const & x, prime_ideal const & P);
int ideal_valuation(frac_ideal const & I, prime_ideal const & P);

/* I = prod P^v over the primes dividing the norm of I */
std::vector<std::pair<prime_ideal, int>> factor_ideal(frac_ideal const & I);
frac_ideal prime_power(prime_ideal const & P, long e);

/* an element of valuation exactly 1 at P */
kelem uniformizer(prime_ideal const & P);

integer mod_sqrt(integer const & a, integer const & p);

} // namespace weier

#endif /* WEIER_IDEAL_HPP */
