#ifndef WEIER_LOCALMIN_HPP
#define WEIER_LOCALMIN_HPP

#include "weier/equation.hpp"
#include "weier/ideal.hpp"

#include <vector>

namespace weier {

/* x = a x' + r, y = b y' + h(x) with deg h <= g + 1 */
struct diag_change
{
    kelem a = 1, r = 0, b = 1;
    poly h;

    /* this change followed by o, expressed from the original coordinates */
    diag_change then(diag_change const & o) const;
    eq_transform transform(int g) const { return eq_transform::diagonal(g, a, r, b, h); }
    bool is_identity() const { return a.is_one() && r.is_zero() && b.is_one() && h.is_zero(); }
};

struct local_model
{
    prime_ideal prime;
    /* integral at the prime, normal, and minimal for the requested notion */
    weierstrass_eq equation;
    /* from the input equation to the local one */
    diag_change change;
    int vdisc = 0;
    int va = 0;
    int vb = 0;

    /* search bookkeeping: vertices visited and the successive best values */
    long nodes = 0;
    std::vector<int> improvements;
};

/* v_P(Delta_in) = 4(2g+1) vb - 2(g+1)(2g+1) va + vdisc, checked exactly;
 * throws std::logic_error on a mismatch */
void check_local_model(weierstrass_eq const & input, local_model const & m);

/* minimum valuation of the coefficients, infinite_valuation for 0 */
int poly_valuation(poly const & f, prime_ideal const & P);

/* p itself when P is unramified, otherwise an element of valuation one */
kelem local_uniformizer(prime_ideal const & P);

/* reduced fiber at P on both charts; throws NonIntegralInput */
bool is_normal_at(weierstrass_eq const & E, prime_ideal const & P);

/* rescale and shift y so that the equation is P-integral and normal,
 * keeping x.  Returns the change (a = 1, r = 0). */
diag_change normalize_y(weierstrass_eq const & E, prime_ideal const & P);

local_model minimize_pointed_at(weierstrass_eq const & E, prime_ideal const & P);

/* default from WEIER_NODE_CAP, else 200000 */
long default_node_cap();

local_model minimize_at(weierstrass_eq const & E, prime_ideal const & P, long node_cap = default_node_cap());

/* the model m of E at its prime, re-expressed for transform(E, T): same
 * vertex, new diagonal change from transform(E, T) */
local_model relocalize(weierstrass_eq const & E, eq_transform const & T, local_model const & m);

/* the model of E itself at P (identity change); E must be P-integral and normal */
local_model identity_model(weierstrass_eq const & E, prime_ideal const & P);

/* the model of E at P given by the change c; throws NonIntegralInput when
 * the resulting equation is not P-integral or not normal */
local_model model_from_change(weierstrass_eq const & E, prime_ideal const & P, diag_change const & c);

} // namespace weier

#endif /* WEIER_LOCALMIN_HPP */
