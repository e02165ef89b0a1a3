#ifndef WEIER_CORPUS_HPP
#define WEIER_CORPUS_HPP

#include "weier/globalmodel.hpp"

#include <cstdint>
#include <string>

namespace weier {

struct corpus_entry
{
    std::string name;
    /* random, rescaled, pointed, twist, cover, power, w_class */
    std::string family;
    weierstrass_eq eq;
    std::vector<local_override> overrides;
};

struct corpus_counts
{
    /* per field, cycling through the genera */
    int random = 10;
    int pointed = 12;
    int twists = 2;
    int covers = 2;
    std::vector<int> genera{1, 2, 4};
    std::vector<long> fields{0, -5, -23};
    /* y^2 = x^(2g+2) + c curves over fields with non-trivial class group */
    bool power_family = true;
    bool w_class_curve = true;
};

/* Deterministic for a fixed seed and counts: the generator uses raw
 * mt19937_64 output only.  Every curve is valid and its discriminant
 * factors within the default budget. */
std::vector<corpus_entry> generate_corpus(std::uint64_t seed, corpus_counts const & counts = {});

/* the y^2 = x^3 + x + 9 curve over Q(sqrt(-5)) with the non-minimal model
 * x = 9x', y = 3y' at (3, 1 + sqrt(-5)): [w] has order 2 */
corpus_entry w_class_example();

} // namespace weier

#endif /* WEIER_CORPUS_HPP */
