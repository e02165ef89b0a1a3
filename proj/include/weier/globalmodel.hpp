#ifndef WEIER_GLOBALMODEL_HPP
#define WEIER_GLOBALMODEL_HPP

#include "weier/class_group.hpp"
#include "weier/localmin.hpp"

#include <optional>
#include <vector>

namespace weier {

/* candidate primes of bad reduction: the support of (Delta) and the primes
 * above coefficient denominators, sorted by norm */
std::vector<prime_ideal> bad_primes(weierstrass_eq const & E);

/* a prescribed local model (any integral normal one, minimal or not) */
struct local_override
{
    prime_ideal prime;
    diag_change change;
};

struct verdicts
{
    bool Z_is_P1 = false;
    bool delta_principal = false;
    bool det_omega_free = false;
    bool w_trivial = false;
    bool thm_main_1a = false;
    bool thm_main_1b = false;
    bool thm_main_2 = false;
    bool thm_main_3 = false;
    bool thm_main_4 = false;
    bool exists_integral_eq = false;
    bool sadek = false;
    /* pointed reports only: u principal */
    bool pointed_integral = false;
};

struct model_report
{
    weierstrass_eq input;
    bool pointed = false;
    /* retained primes, sorted by norm; all changes share r and h */
    std::vector<local_model> locals;
    kelem r;
    poly h;
    frac_ideal a, b, delta, u;
    qform class_a, class_b, class_w, class_det_omega, class_delta, class_u;
    long class_number = 1;
    std::vector<long> structure;
    verdicts v;
    std::optional<weierstrass_eq> synthesized;
};

struct assemble_options
{
    bool pointed = false;
    long node_cap = default_node_cap();
    std::vector<local_override> overrides;
    /* per-prime minimization on OpenMP threads */
    bool parallel = true;
};

/* local models at the given primes, in the given order */
std::vector<local_model> local_models(weierstrass_eq const & E, std::vector<prime_ideal> const & primes,
                                      assemble_options const & opt);

model_report assemble(weierstrass_eq const & E, assemble_options const & opt = {});

/* glue given local models (one per prime, any order); primes not listed
 * must be primes of good reduction of E */
model_report assemble_from_local(weierstrass_eq const & E, std::vector<local_model> locals, bool pointed);

/* [b^-1 a^((g+1)/2)] for odd g, [b^-2 a^(g+1)] for even g */
qform w_class(int g, frac_ideal const & a, frac_ideal const & b);
/* [a^(-g(g+1)/2) b^g] */
qform det_omega_class(int g, frac_ideal const & a, frac_ideal const & b);

qform weierstrass_class(model_report const & R);
/* checks [w] = [u]^g (g odd) or [u]^(2g) (g even) */
qform pointed_class(model_report const & R);

verdicts check_conditions(model_report const & R, class_group const & cg);

/* default number of Moebius candidates tried by synthesize */
constexpr long default_mobius_budget = 64;

/* a global integral equation for the glued model.  Throws
 * ObstructionNonSquareBundle, ObstructionWClass or SearchBudgetExceeded. */
weierstrass_eq synthesize(model_report const & R, long mobius_budget = default_mobius_budget);

bool sadek_check(weierstrass_eq const & E, assemble_options const & opt = {});

/* the discriminant ideal of an equation */
frac_ideal discriminant_ideal(weierstrass_eq const & E);

bool is_integral(weierstrass_eq const & E);

} // namespace weier

#endif /* WEIER_GLOBALMODEL_HPP */
