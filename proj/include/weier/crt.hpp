#ifndef WEIER_CRT_HPP
#define WEIER_CRT_HPP

#include "weier/ideal.hpp"

#include <vector>

namespace weier {

/* root rho in Z of x^2 - t x + n0 with rho = r mod p and precision p^N,
 * for a split prime (p, w - r) */
integer split_root(prime_ideal const & P, int N);

/* beta in O_K with v_P(alpha - beta) >= k, for v_P(alpha) >= 0.  For
 * degree one primes beta is a rational integer. */
kelem integral_rep(kelem const & alpha, prime_ideal const & P, int k);

/* x in I, y in J with x + y = 1 for coprime integral ideals */
std::pair<kelem, kelem> express_one(frac_ideal const & I, frac_ideal const & J);

struct crt_constraint
{
    prime_ideal prime;
    kelem target;
    int k = 0;
};

/* r with v_P(r - target_P) >= k_P for every constraint and v_Q(r) >= 0 at
 * every other prime Q.  Targets and precisions may be arbitrary; throws
 * DuplicatePrime. */
kelem crt_approximate(field_spec K, std::vector<crt_constraint> const & constraints);

} // namespace weier

#endif /* WEIER_CRT_HPP */
