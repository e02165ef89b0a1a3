#ifndef WEIER_ERROR_HPP
#define WEIER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace weier {

enum class errc {
    zero_polynomial,
    zero_form,
    singular_matrix,
    zero_ideal,
    unsupported_field,
    duplicate_prime,
    not_found,
    singular_generic_fiber,
    degree_violation,
    zero_twist,
    ramified_at_zero_or_infinity,
    non_integral_input,
    search_budget_exceeded,
    inconsistent_pointed_data,
    obstruction_non_square_bundle,
    obstruction_w_class,
    malformed_input,
    field_mismatch,
};

char const * errc_name(errc c);

class error : public std::runtime_error
{
    errc code_;

    public:
    error(errc c, std::string const & what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what)
        , code_(c)
    {}

    errc code() const { return code_; }
};

} // namespace weier

#endif /* WEIER_ERROR_HPP */
