#include "weier/factor.hpp"
#include "weier/error.hpp"

#include <algorithm>
#include <map>

namespace weier {

bool is_probable_prime(integer const & n)
{
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

int valuation(integer const & n, integer const & p)
{
    if (n == 0) throw std::domain_error("valuation of zero");
    integer m = abs(n);
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

int valuation(rat const & q, integer const & p)
{
    return valuation(integer(q.get_num()), p) - valuation(integer(q.get_den()), p);
}

namespace {

/* Brent's variant of Pollard rho; returns a non-trivial factor or 0. */
integer pollard_brent(integer const & n, unsigned long c0, unsigned long & budget)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    integer c = c0;
    integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    unsigned long const m = 128;
    auto f = [&](integer const & v) {
        integer t = v * v + c;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        return t;
    };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = f(y);
                integer diff = abs(x - y);
                q = q * diff;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
            if (budget < lim) return 0;
            budget -= lim;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            integer diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n) return 0;
    return g;
}

void split(integer const & n, std::map<integer, int> & out, int mult, unsigned long & budget)
{
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += mult;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
            integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                split(root, out, mult * static_cast<int>(k), budget);
                return;
            }
        }
    }
    for (unsigned long c = 1;; ++c) {
        integer f = pollard_brent(n, c, budget);
        if (f != 0 && f != n) {
            integer g = n / f;
            split(f, out, mult, budget);
            split(g, out, mult, budget);
            return;
        }
        if (budget == 0 || c > 64)
            throw error(errc::search_budget_exceeded, "could not factor " + n.get_str());
    }
}

} // namespace

std::vector<std::pair<integer, int>> factor_integer(integer const & n0, unsigned long rho_budget)
{
    if (n0 == 0) throw std::domain_error("factor_integer(0)");
    integer n = abs(n0);
    std::map<integer, int> out;
    for (unsigned long p = 2; p < 20000 && n > 1; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            out[integer(p)] += 1;
        }
    }
    unsigned long budget = rho_budget;
    split(n, out, 1, budget);
    return {out.begin(), out.end()};
}

} // namespace weier
