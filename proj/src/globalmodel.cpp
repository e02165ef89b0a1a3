#include "weier/globalmodel.hpp"
#include "weier/crt.hpp"
#include "weier/error.hpp"
#include "weier/factor.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

namespace weier {

namespace {

bool by_norm(prime_ideal const & x, prime_ideal const & y)
{
    integer const nx = x.norm(), ny = y.norm();
    if (nx != ny) return nx < ny;
    return x < y;
}

void add_prime(std::vector<prime_ideal> & out, prime_ideal const & P)
{
    if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
}

void add_primes_above(std::vector<prime_ideal> & out, field_spec K, integer const & n)
{
    if (n == 1) return;
    for (auto const & [p, e] : factor_integer(n))
        for (auto const & [P, ee] : factor_rational_prime(K, p)) add_prime(out, P);
}

frac_ideal product_over(field_spec K, std::vector<local_model> const & locals, int local_model::*field)
{
    frac_ideal I = frac_ideal::unit(K);
    for (auto const & m : locals) I = ideal_product(I, prime_power(m.prime, m.*field));
    return I;
}

bool trivial_change_at(local_model const & m)
{
    if (m.vdisc != 0 || m.va != 0 || m.vb != 0) return false;
    if (valuation(m.change.r, m.prime) < 0) return false;
    return poly_valuation(m.change.h, m.prime) >= 0;
}

long gcd_long(long x, long y)
{
    return std::gcd(x, y);
}

/* r with v(r - r_s) >= v(a_s) at every prime, then h aligned in powers of x - r */
void align(model_report & R, std::vector<local_model> const & locals)
{
    field_spec const K = R.input.field;
    int const g = R.input.genus;
    std::vector<crt_constraint> cr;
    for (auto const & m : locals) cr.push_back({m.prime, m.change.r, m.va});
    R.r = crt_approximate(K, cr);
    std::vector<kelem> hc(g + 2);
    for (int k = 0; k <= g + 1; ++k) {
        std::vector<crt_constraint> ch;
        for (auto const & m : locals) {
            poly const shifted = m.change.h.substitute_linear(1, R.r);
            ch.push_back({m.prime, shifted.coeff(k), m.vb - k * m.va});
        }
        hc[k] = crt_approximate(K, ch);
    }
    R.h = poly(hc).substitute_linear(1, -R.r);
    for (auto const & m : locals) {
        diag_change c = m.change;
        c.r = R.r;
        c.h = R.h;
        local_model a = model_from_change(R.input, m.prime, c);
        if (a.vdisc != m.vdisc) throw std::logic_error("assemble: alignment changed a local model");
        a.nodes = m.nodes;
        a.improvements = m.improvements;
        R.locals.push_back(std::move(a));
    }
}

weierstrass_eq direct_equation(model_report const & R, kelem const & alpha, kelem const & beta)
{
    weierstrass_eq out = transform(R.input, eq_transform::diagonal(R.input.genus, alpha, R.r, beta, R.h));
    if (!is_integral(out)) throw std::logic_error("synthesize: output equation is not integral");
    if (!(discriminant_ideal(out) == R.delta)) throw std::logic_error("synthesize: output discriminant ideal differs");
    return out;
}

std::optional<weierstrass_eq> try_direct(model_report const & R)
{
    auto alpha = principal_generator(R.a);
    auto beta = principal_generator(R.b);
    if (!alpha || !beta) return std::nullopt;
    return direct_equation(R, *alpha, *beta);
}

std::vector<prime_ideal> support(frac_ideal const & I)
{
    std::vector<prime_ideal> out;
    if (I.is_unit()) return out;
    for (auto const & [P, v] : factor_ideal(I))
        if (v != 0) out.push_back(P);
    return out;
}

/* x'' = 1/(x/lambda - c) for a square root [c] of [a]: the new a'' is trivial */
std::optional<weierstrass_eq> try_square_root(model_report const & R, qform const & root)
{
    field_spec const K = R.input.field;
    frac_ideal const cI = ideal_of(K, root);
    auto lambda = principal_generator(ideal_product(R.a, ideal_power(cI, -2)));
    if (!lambda) throw std::logic_error("synthesize: square root class does not square to [a]");

    std::vector<prime_ideal> S;
    for (auto const & m : R.locals) add_prime(S, m.prime);
    for (auto const & P : support(cI)) add_prime(S, P);
    for (auto const & P : support(frac_ideal::principal(K, *lambda))) add_prime(S, P);

    kelem const rt = R.r / *lambda;
    std::vector<crt_constraint> cons;
    for (auto const & P : S) {
        int const k = ideal_valuation(cI, P);
        if (k > 0)
            cons.push_back({P, rt + pow(local_uniformizer(P), static_cast<long>(k)), k + 1});
        else
            cons.push_back({P, rt, 0});
    }
    kelem const c = crt_approximate(K, cons);

    eq_transform T = eq_transform::identity(R.input.genus);
    T.m = mat2{0, *lambda, 1, -*lambda * c};
    weierstrass_eq const E2 = transform(R.input, T);
    std::vector<local_model> moved;
    for (auto const & P : S) {
        auto it = std::find_if(R.locals.begin(), R.locals.end(), [&](local_model const & m) { return m.prime == P; });
        local_model const base = it != R.locals.end() ? *it : identity_model(R.input, P);
        moved.push_back(relocalize(R.input, T, base));
    }
    model_report R2 = assemble_from_local(E2, moved, false);
    if (!R2.a.is_unit()) throw std::logic_error("synthesize: Moebius move left a non-trivial a");
    return try_direct(R2);
}

} // namespace

frac_ideal discriminant_ideal(weierstrass_eq const & E)
{
    return frac_ideal::principal(E.field, discriminant(E));
}

bool is_integral(weierstrass_eq const & E)
{
    for (auto const & c : E.P.coeffs())
        if (!c.is_integral()) return false;
    for (auto const & c : E.Q.coeffs())
        if (!c.is_integral()) return false;
    return true;
}

std::vector<prime_ideal> bad_primes(weierstrass_eq const & E)
{
    field_spec const K = E.field;
    std::vector<prime_ideal> out;
    for (auto const & P : support(discriminant_ideal(E))) add_prime(out, P);
    for (auto const & c : E.P.coeffs()) add_primes_above(out, K, c.denominator());
    for (auto const & c : E.Q.coeffs()) add_primes_above(out, K, c.denominator());
    std::sort(out.begin(), out.end(), by_norm);
    return out;
}

std::vector<local_model> local_models(weierstrass_eq const & E, std::vector<prime_ideal> const & primes,
                                      assemble_options const & opt)
{
    long const n = static_cast<long>(primes.size());
    std::vector<local_model> out(n);
    std::vector<std::exception_ptr> err(n);
    auto one = [&](long i) {
        try {
            prime_ideal const & P = primes[i];
            auto ov = std::find_if(opt.overrides.begin(), opt.overrides.end(),
                                   [&](local_override const & o) { return o.prime == P; });
            if (ov != opt.overrides.end())
                out[i] = model_from_change(E, P, ov->change);
            else if (opt.pointed)
                out[i] = minimize_pointed_at(E, P);
            else
                out[i] = minimize_at(E, P, opt.node_cap);
        } catch (...) {
            err[i] = std::current_exception();
        }
    };
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) one(i);
    } else {
        for (long i = 0; i < n; ++i) one(i);
    }
    for (auto const & e : err)
        if (e) std::rethrow_exception(e);
    return out;
}

model_report assemble(weierstrass_eq const & E, assemble_options const & opt)
{
    validate(E);
    if (opt.pointed && !E.has_pointed_shape())
        throw error(errc::degree_violation, "pointed analysis needs P monic of degree 2g+1 and deg Q <= g");
    std::vector<prime_ideal> primes = bad_primes(E);
    for (auto const & o : opt.overrides) add_prime(primes, o.prime);
    std::sort(primes.begin(), primes.end(), by_norm);
    return assemble_from_local(E, local_models(E, primes, opt), opt.pointed);
}

model_report assemble_from_local(weierstrass_eq const & E, std::vector<local_model> locals, bool pointed)
{
    field_spec const K = E.field;
    int const g = E.genus;
    model_report R;
    R.input = E;
    R.pointed = pointed;

    std::sort(locals.begin(), locals.end(),
              [](local_model const & x, local_model const & y) { return by_norm(x.prime, y.prime); });
    std::vector<local_model> kept;
    for (auto const & m : locals) {
        if (m.equation.field != K) throw error(errc::field_mismatch, "local model over another field");
        if (!kept.empty() && kept.back().prime == m.prime) throw error(errc::duplicate_prime, "two local models at one prime");
        check_local_model(E, m);
        if (!trivial_change_at(m)) kept.push_back(m);
    }
    align(R, kept);

    R.a = product_over(K, R.locals, &local_model::va);
    R.b = product_over(K, R.locals, &local_model::vb);
    R.delta = product_over(K, R.locals, &local_model::vdisc);
    long const n = 2L * g + 1;
    frac_ideal const rhs = ideal_product(ideal_product(ideal_power(R.b, 4 * n), ideal_power(R.a, -2 * (g + 1) * n)), R.delta);
    if (!(rhs == discriminant_ideal(E))) throw std::logic_error("assemble: discriminant ideal identity fails");

    R.u = frac_ideal::unit(K);
    if (pointed) {
        for (auto const & m : R.locals) {
            if (n * m.va != 2 * m.vb)
                throw error(errc::inconsistent_pointed_data, "a_s^(2g+1) and b_s^2 differ at a prime");
            R.u = ideal_product(R.u, prime_power(m.prime, g * m.va - m.vb));
        }
    }

    class_group const cg = compute_class_group(K);
    R.class_number = cg.order();
    R.structure = cg.structure;
    R.class_a = class_of(R.a);
    R.class_b = class_of(R.b);
    R.class_w = w_class(g, R.a, R.b);
    R.class_det_omega = det_omega_class(g, R.a, R.b);
    R.class_delta = class_of(R.delta);
    R.class_u = class_of(R.u);
    R.v = check_conditions(R, cg);
    return R;
}

qform w_class(int g, frac_ideal const & a, frac_ideal const & b)
{
    if (g % 2) return class_of(ideal_product(ideal_inverse(b), ideal_power(a, (g + 1) / 2)));
    return class_of(ideal_product(ideal_power(b, -2), ideal_power(a, g + 1)));
}

qform det_omega_class(int g, frac_ideal const & a, frac_ideal const & b)
{
    return class_of(ideal_product(ideal_power(a, -static_cast<long>(g) * (g + 1) / 2), ideal_power(b, g)));
}

qform weierstrass_class(model_report const & R)
{
    return R.class_w;
}

qform pointed_class(model_report const & R)
{
    if (!R.pointed) throw std::logic_error("pointed_class of a non-pointed report");
    int const g = R.input.genus;
    qform const expect = reduce(form_power(R.class_u, g % 2 ? g : 2 * g));
    if (!(expect == R.class_w)) throw std::logic_error("pointed class inconsistent with the Weierstrass class");
    return R.class_u;
}

verdicts check_conditions(model_report const & R, class_group const & cg)
{
    int const g = R.input.genus;
    long const h = cg.order();
    verdicts v;
    v.Z_is_P1 = cg.is_square(R.class_a);
    v.delta_principal = is_principal_class(R.class_delta);
    v.det_omega_free = is_principal_class(R.class_det_omega);
    v.w_trivial = is_principal_class(R.class_w);
    bool const both = v.delta_principal && v.det_omega_free;
    v.thm_main_1a = g % 2 == 1 && v.Z_is_P1 && both;
    v.thm_main_1b = g % 4 == 2 && both;
    v.thm_main_2 = h % 2 == 1 && both;
    v.thm_main_3 = gcd_long(h, 2L * (2 * g + 1)) == 1 && v.delta_principal;
    v.thm_main_4 = gcd_long(h, 2L * g) == 1 && v.det_omega_free;
    v.exists_integral_eq = v.Z_is_P1 && v.w_trivial;
    v.sadek = R.delta.is_unit() && gcd_long(h, 2L * (2 * g + 1)) == 1;
    if (R.pointed) {
        v.pointed_integral = is_principal_class(R.class_u);
        if (!v.Z_is_P1) throw std::logic_error("pointed report with a non-square [a]");
    }
    return v;
}

weierstrass_eq synthesize(model_report const & R, long mobius_budget)
{
    if (!R.v.w_trivial) throw error(errc::obstruction_w_class, "the Weierstrass class is not trivial");
    if (!R.v.Z_is_P1) throw error(errc::obstruction_non_square_bundle, "[a] is not a square: Z is not P^1");
    int const g = R.input.genus;
    if (R.pointed && R.v.pointed_integral) {
        kelem const mu = *principal_generator(R.u);
        weierstrass_eq out = direct_equation(R, pow(mu, -2L), pow(mu, -(2L * g + 1)));
        if (!out.has_pointed_shape()) throw std::logic_error("synthesize: pointed output lost its shape");
        out.pointed = true;
        return out;
    }
    if (auto out = try_direct(R)) return *out;

    class_group const cg = compute_class_group(R.input.field);
    int const ia = cg.index_of(R.class_a);
    long tried = 0;
    for (size_t j = 0; j < cg.forms.size(); ++j) {
        if (cg.table[j][j] != ia) continue;
        if (tried++ >= mobius_budget) break;
        if (auto out = try_square_root(R, cg.forms[j])) return *out;
    }
    throw error(errc::search_budget_exceeded, "no Moebius move gave principal a and b");
}

bool sadek_check(weierstrass_eq const & E, assemble_options const & opt)
{
    return assemble(E, opt).v.sadek;
}

} // namespace weier
