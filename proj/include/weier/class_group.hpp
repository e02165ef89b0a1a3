#ifndef WEIER_CLASS_GROUP_HPP
#define WEIER_CLASS_GROUP_HPP

#include "weier/ideal.hpp"

#include <optional>
#include <vector>

namespace weier {

/* Positive definite binary quadratic form A x^2 + B x y + C y^2.  Over Q
 * the only class is represented by (1, 1, 0) of discriminant 1. */
struct qform
{
    integer A = 1, B = 1, C = 0;

    integer disc() const { return B * B - 4 * A * C; }
    bool operator==(qform const &) const = default;
    bool operator<(qform const & o) const;
};

/* reduced representative: |B| <= A <= C, B >= 0 if |B| = A or A = C */
qform reduce(qform f);
bool is_reduced(qform const & f);
qform principal_form(long D);
qform compose(qform const & f, qform const & g);
qform form_inverse(qform const & f);
qform form_power(qform const & f, long e);

/* all reduced forms of discriminant D < 0, principal form first */
std::vector<qform> reduced_forms(long D);

struct class_group
{
    field_spec field;
    long D = 1;
    std::vector<qform> forms;
    /* table[i][j] = index of forms[i] * forms[j] */
    std::vector<std::vector<int>> table;
    /* invariant factors d_1 | d_2 | ..., empty for the trivial group */
    std::vector<long> structure;

    long order() const { return static_cast<long>(forms.size()); }
    long exponent() const { return structure.empty() ? 1 : structure.back(); }
    int index_of(qform const & f) const;
    long order_of(qform const & f) const;
    bool is_square(qform const & f) const;
};

/* throws UnsupportedField for anything but Q or an imaginary quadratic field */
class_group compute_class_group(field_spec K);

/* invariant factors of the finite abelian group given by its table */
std::vector<long> group_structure(std::vector<std::vector<int>> const & table, int identity);

qform class_of(frac_ideal const & I);
/* an integral ideal in the class of the reduced form f */
frac_ideal ideal_of(field_spec K, qform const & f);
bool is_principal_class(qform const & f);

/* gamma with (gamma) = I, if I is principal */
std::optional<kelem> principal_generator(frac_ideal const & I);

/* first squarefree d in -1, -2, ..., -bound whose class group has an
 * element of exact order n; throws NotFound */
field_spec find_field_with_class_element_of_order(long n, long bound);

} // namespace weier

#endif /* WEIER_CLASS_GROUP_HPP */
