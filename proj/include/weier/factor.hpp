#ifndef WEIER_FACTOR_HPP
#define WEIER_FACTOR_HPP

#include "weier/field.hpp"

#include <utility>
#include <vector>

namespace weier {

bool is_probable_prime(integer const & n);

/* Factorization of |n| (n != 0) into primes with multiplicities, sorted by
 * prime.  Trial division, perfect-power detection and Pollard-Brent rho;
 * throws SearchBudgetExceeded if a cofactor resists rho_budget iterations. */
std::vector<std::pair<integer, int>> factor_integer(integer const & n, unsigned long rho_budget = 20000000UL);

/* v_p(n) for n != 0 */
int valuation(integer const & n, integer const & p);
/* v_p(q) for q != 0 */
int valuation(rat const & q, integer const & p);

} // namespace weier

#endif /* WEIER_FACTOR_HPP */
