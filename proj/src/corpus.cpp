#include "weier/corpus.hpp"
#include "weier/error.hpp"
#include "weier/factor.hpp"

#include <random>

namespace weier {

namespace {

class source
{
    std::mt19937_64 rng_;

    public:
    explicit source(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi)
    {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    kelem elem(field_spec f, long bound)
    {
        long const x = uniform(-bound, bound);
        if (f.is_rational()) return kelem(x);
        long const y = uniform(-bound, bound);
        return kelem(rat(x), rat(y), f);
    }

    kelem nonzero(field_spec f, long bound)
    {
        for (;;) {
            kelem x = elem(f, bound);
            if (!x.is_zero()) return x;
        }
    }

    poly random_poly(field_spec f, int deg, long bound)
    {
        std::vector<kelem> c;
        for (int i = 0; i <= deg; ++i) c.push_back(elem(f, bound));
        return poly(c);
    }
};

std::string field_tag(field_spec f)
{
    return f.is_rational() ? "Q" : "Q" + std::to_string(f.d);
}

/* valid, with a discriminant whose norm factors quickly */
bool usable(weierstrass_eq const & E)
{
    try {
        validate(E);
        rat const N = discriminant(E).norm();
        factor_integer(N.get_num(), 200000);
        factor_integer(N.get_den(), 200000);
        bad_primes(E);
        return true;
    } catch (error const &) {
        return false;
    }
}

long coeff_bound(int g)
{
    return g >= 4 ? 1 : 3;
}

weierstrass_eq random_curve(source & s, field_spec f, int g)
{
    for (;;) {
        poly P = s.random_poly(f, 2 * g + 2, coeff_bound(g));
        poly Q = s.uniform(0, 1) ? s.random_poly(f, g + 1, 1) : poly();
        if (P.degree() < 2 * g + 1) continue;
        weierstrass_eq E(f, g, P, Q);
        if (usable(E)) return E;
    }
}

weierstrass_eq pointed_curve(source & s, field_spec f, int g, bool with_q)
{
    for (;;) {
        poly P = s.random_poly(f, 2 * g, coeff_bound(g)) + poly::monomial(1, 2 * g + 1);
        poly Q = with_q && s.uniform(0, 1) ? s.random_poly(f, g, 1) : poly();
        weierstrass_eq E(f, g, P, Q, true);
        if (usable(E)) return E;
    }
}

/* generator of P^k when that power is principal */
std::optional<kelem> power_generator(prime_ideal const & P, long k)
{
    return principal_generator(prime_power(P, k));
}

} // namespace

corpus_entry w_class_example()
{
    field_spec const f = field_spec::imaginary_quadratic(-5);
    corpus_entry e;
    e.name = "Q-5-w_class-0";
    e.family = "w_class";
    e.eq = weierstrass_eq(f, 1, poly({kelem(9), kelem(1), kelem(0), kelem(1)}), poly());
    local_override o;
    o.prime = factor_rational_prime(f, 3).at(0).first;
    o.change.a = 9;
    o.change.b = 3;
    e.overrides.push_back(o);
    return e;
}

std::vector<corpus_entry> generate_corpus(std::uint64_t seed, corpus_counts const & counts)
{
    std::vector<corpus_entry> out;
    source s(seed);
    auto add = [&](field_spec f, std::string const & family, weierstrass_eq E) {
        corpus_entry e;
        e.name = field_tag(f) + "-" + family + "-" + std::to_string(out.size());
        e.family = family;
        e.eq = std::move(E);
        out.push_back(std::move(e));
    };
    size_t const ng = counts.genera.size();

    for (long d : counts.fields) {
        field_spec const f = d == 0 ? field_spec::rationals() : field_spec::imaginary_quadratic(d);

        for (int i = 0; i < counts.random; ++i) {
            int const g = counts.genera[i % ng];
            weierstrass_eq E = random_curve(s, f, g);
            if (i % 2 == 0) {
                add(f, "random", E);
                continue;
            }
            /* x = a x' + r, y = b y' + h(x) with small a, b: new bad primes */
            for (;;) {
                kelem const a = s.nonzero(f, 2), b = s.nonzero(f, 3);
                weierstrass_eq R = transform(E, eq_transform::diagonal(g, a, s.elem(f, 2), b, s.random_poly(f, 1, 1)));
                if (usable(R)) {
                    add(f, "rescaled", R);
                    break;
                }
            }
        }

        for (int i = 0; i < counts.pointed; ++i) {
            int const g = counts.genera[i % ng];
            weierstrass_eq E = pointed_curve(s, f, g, true);
            if (i % 2 == 1) {
                /* x' = u^2 (x - r), y' = u^(2g+1) (y - h(x)) stays integral and pointed */
                for (;;) {
                    kelem const u = s.nonzero(f, 2);
                    eq_transform const T = eq_transform::diagonal(g, kelem(1) / pow(u, 2L), s.elem(f, 2),
                                                                  kelem(1) / pow(u, 2L * g + 1), s.random_poly(f, g, 1));
                    weierstrass_eq R = transform(E, T);
                    R.pointed = true;
                    if (usable(R)) {
                        E = R;
                        break;
                    }
                }
            }
            add(f, "pointed", E);
        }

        for (int i = 0; i < counts.twists; ++i) {
            int const g = counts.genera[i % ng];
            weierstrass_eq const E = pointed_curve(s, f, g, false);
            for (;;) {
                weierstrass_eq T = quadratic_twist(E, s.nonzero(f, 3));
                if (usable(T)) {
                    add(f, "twist", T);
                    break;
                }
            }
        }

        for (int i = 0; i < counts.covers; ++i) {
            long const alphas[] = {1, 2, -3};
            for (;;) {
                weierstrass_eq const E0 = random_curve(s, f, 1);
                binary_form const F = E0.F_form();
                if (F.coeffs.front().is_zero() || F.coeffs.back().is_zero()) continue;
                weierstrass_eq C = power_cover(E0, 2, kelem(alphas[i % 3]));
                if (usable(C)) {
                    add(f, "cover", C);
                    break;
                }
            }
        }

        /* y^2 = x^(2g+2) + c and y^2 = x^(2g+1) + c with c a generator of a
         * power of a single prime: the local models rescale x by an odd
         * (resp. single) power of that prime */
        if (counts.power_family && !f.is_rational()) {
            for (long p : {2L, 3L}) {
                for (auto const & [P, e] : factor_rational_prime(f, p)) {
                    for (int g : counts.genera) {
                        if (auto c = power_generator(P, 2L * g + 2)) {
                            std::vector<kelem> co(2 * g + 3);
                            co[0] = *c;
                            co[2 * g + 2] = 1;
                            weierstrass_eq E(f, g, poly(co), poly());
                            if (usable(E)) add(f, "power", E);
                        }
                        if (auto c = power_generator(P, 2L * (2 * g + 1))) {
                            std::vector<kelem> co(2 * g + 2);
                            co[0] = *c;
                            co[2 * g + 1] = 1;
                            weierstrass_eq E(f, g, poly(co), poly(), true);
                            if (usable(E)) add(f, "power_pointed", E);
                        }
                    }
                }
            }
        }
    }
    if (counts.w_class_curve) out.push_back(w_class_example());
    return out;
}

} // namespace weier
