#ifndef WEIER_RESIDUE_HPP
#define WEIER_RESIDUE_HPP

#include "weier/ideal.hpp"

#include <optional>
#include <vector>

namespace weier {

/* The residue field O/P, either F_p or F_p[w] with w^2 = t w - n0 for an
 * inert prime.  Elements are pairs (u, v) standing for u + v w, v = 0 in
 * the degree one case. */
class residue_field
{
    prime_ideal P_;
    integer p_;
    integer t_, n0_;
    integer q_;

    public:
    struct elt
    {
        integer u = 0, v = 0;
        bool operator==(elt const &) const = default;
    };
    using rpoly = std::vector<elt>;

    explicit residue_field(prime_ideal const & P);

    prime_ideal const & prime() const { return P_; }
    integer const & characteristic() const { return p_; }
    integer const & size() const { return q_; }
    int degree() const { return P_.f; }

    elt zero() const { return {}; }
    elt one() const { return {1, 0}; }
    bool is_zero(elt const & x) const { return x.u == 0 && x.v == 0; }

    elt add(elt const & x, elt const & y) const;
    elt sub(elt const & x, elt const & y) const;
    elt neg(elt const & x) const;
    elt mul(elt const & x, elt const & y) const;
    elt pow(elt x, integer e) const;
    elt inv(elt const & x) const;
    std::optional<elt> sqrt(elt const & x) const;

    /* the element with index i < q, enumerating the field */
    elt element(integer const & i) const;
    /* reduction of a P-integral element */
    elt reduce(kelem const & x) const;
    /* the standard lift to O_K (a rational integer in degree one) */
    kelem lift(elt const & x) const;

    /* polynomials over the residue field, constant term first, trimmed */
    void trim(rpoly & f) const;
    rpoly reduce(std::vector<kelem> const & coeffs) const;
    elt eval(rpoly const & f, elt const & x) const;
    rpoly poly_mul(rpoly const & f, rpoly const & g) const;
    rpoly poly_sub(rpoly const & f, rpoly const & g) const;
    rpoly poly_mod(rpoly f, rpoly const & g) const;
    rpoly poly_div_linear(rpoly const & f, elt const & r) const;
    rpoly poly_gcd(rpoly f, rpoly g) const;
    rpoly poly_powmod(rpoly const & f, integer e, rpoly const & m) const;
    /* distinct roots in the residue field */
    std::vector<elt> roots(rpoly f) const;
    /* multiplicity of r as a root of f (f != 0) */
    int multiplicity(rpoly f, elt const & r) const;
};

} // namespace weier

#endif /* WEIER_RESIDUE_HPP */
