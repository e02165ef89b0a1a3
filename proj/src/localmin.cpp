#include "weier/localmin.hpp"
#include "weier/error.hpp"
#include "weier/residue.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>

namespace weier {

namespace {

int form_valuation(binary_form const & B, prime_ideal const & P)
{
    int v = infinite_valuation;
    for (auto const & c : B.coeffs) v = std::min(v, valuation(c, P));
    return v;
}

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b)
{
    return -floor_div(-a, b);
}

int vdisc_of(weierstrass_eq const & E, prime_ideal const & P)
{
    return valuation(discriminant(E), P);
}

bool residue_char_two(prime_ideal const & P)
{
    return P.p == 2;
}

std::vector<residue_field::elt> reduce_form(residue_field const & k, binary_form const & B)
{
    std::vector<residue_field::elt> out;
    for (auto const & c : B.coeffs) out.push_back(k.reduce(c));
    return out;
}

bool all_zero(residue_field const & k, std::vector<residue_field::elt> const & v)
{
    return std::all_of(v.begin(), v.end(), [&](auto const & x) { return k.is_zero(x); });
}

} // namespace

diag_change diag_change::then(diag_change const & o) const
{
    diag_change c;
    c.a = a * o.a;
    c.r = a * o.r + r;
    c.b = b * o.b;
    kelem const ia = kelem(1) / a;
    c.h = h + o.h.substitute_linear(ia, -r * ia) * b;
    return c;
}

void check_local_model(weierstrass_eq const & input, local_model const & m)
{
    int const g = input.genus;
    int const vin = vdisc_of(input, m.prime);
    if (m.va != valuation(m.change.a, m.prime) || m.vb != valuation(m.change.b, m.prime))
        throw std::logic_error("local model: va or vb out of date");
    if (vdisc_of(m.equation, m.prime) != m.vdisc) throw std::logic_error("local model: vdisc out of date");
    if (vin != 4 * (2 * g + 1) * m.vb - 2 * (g + 1) * (2 * g + 1) * m.va + m.vdisc)
        throw std::logic_error("local model: discriminant law violated");
    if (poly_valuation(m.equation.P, m.prime) < 0 || poly_valuation(m.equation.Q, m.prime) < 0)
        throw std::logic_error("local model: equation not integral");
    if (m.vdisc < 0) throw std::logic_error("local model: negative discriminant valuation");
}

int poly_valuation(poly const & f, prime_ideal const & P)
{
    int v = infinite_valuation;
    for (auto const & c : f.coeffs()) v = std::min(v, valuation(c, P));
    return v;
}

kelem local_uniformizer(prime_ideal const & P)
{
    if (P.e == 1) return kelem(rat(P.p));
    return uniformizer(P);
}

bool is_normal_at(weierstrass_eq const & E, prime_ideal const & P)
{
    if (poly_valuation(E.P, P) < 0 || poly_valuation(E.Q, P) < 0)
        throw error(errc::non_integral_input, "equation is not integral at the prime");
    residue_field k(P);
    if (!residue_char_two(P)) return !all_zero(k, reduce_form(k, E.F_form()));
    if (!all_zero(k, reduce_form(k, E.Q_form()))) return true;
    auto pb = reduce_form(k, E.P_form());
    for (size_t i = 1; i < pb.size(); i += 2)
        if (!k.is_zero(pb[i])) return true;
    return false;
}

diag_change normalize_y(weierstrass_eq const & E, prime_ideal const & P)
{
    int const g = E.genus;
    kelem const pi = local_uniformizer(P);
    int const vP = poly_valuation(E.P, P), vQ = poly_valuation(E.Q, P);
    if (!residue_char_two(P)) {
        int const c = form_valuation(E.F_form(), P);
        if (c == infinite_valuation) throw error(errc::singular_generic_fiber, "4P + Q^2 vanishes");
        if (vP >= 0 && vQ >= 0 && c <= 1) return {};
        diag_change d;
        d.b = pow(pi, floor_div(c, 2));
        d.h = E.Q * kelem(rat(-1, 2));
        return d;
    }
    /* largest pure rescaling keeping both integral, then greedy square removal */
    long const k0 = std::min<long>(vQ, floor_div(vP, 2));
    diag_change d;
    d.b = pow(pi, k0);
    weierstrass_eq cur = transform(E, d.transform(g));
    residue_field k(P);
    for (;;) {
        if (!all_zero(k, reduce_form(k, cur.Q_form()))) break;
        auto pb = reduce_form(k, cur.P_form());
        bool square = true;
        for (size_t i = 1; i < pb.size(); i += 2) square = square && k.is_zero(pb[i]);
        if (!square) break;
        std::vector<kelem> hc;
        for (int j = 0; j <= g + 1; ++j) hc.push_back(k.lift(*k.sqrt(pb[2 * j])));
        poly const h0(hc);
        poly const rest = cur.P - h0 * cur.Q - h0 * h0;
        if (poly_valuation(rest, P) < 2) break;
        diag_change step;
        step.b = pi;
        step.h = h0;
        d = d.then(step);
        cur = transform(cur, step.transform(g));
    }
    return d;
}

namespace {

local_model finish(weierstrass_eq const & E, prime_ideal const & P, diag_change const & ch)
{
    local_model m;
    m.prime = P;
    m.change = ch;
    m.equation = transform(E, ch.transform(E.genus));
    m.va = valuation(ch.a, P);
    m.vb = valuation(ch.b, P);
    m.vdisc = vdisc_of(m.equation, P);
    return m;
}

/* digits r mod P^2 and, with use_h, h_j mod P^{2g+1-2j} such that after
 * x -> x + r, y -> y + h the weighted valuations allow x = pi^2 x',
 * y = pi^{2g+1} y'.  h is returned in powers of x - r. */
struct pointed_search
{
    weierstrass_eq const & E;
    prime_ideal const & P;
    std::vector<kelem> const & lifts;
    kelem pi;
    bool use_h;
    int g;
    kelem r;
    std::vector<kelem> h;

    bool conditions(int cap) const
    {
        poly const Ps = E.P.substitute_linear(1, r), Qs = E.Q.substitute_linear(1, r);
        poly const hp(h);
        poly const Qt = Qs + hp * kelem(2), Pt = Ps - hp * Qs - hp * hp;
        for (int j = 0; j <= g; ++j)
            if (valuation(Qt.coeff(j), P) < std::min(cap, 2 * g + 1 - 2 * j)) return false;
        for (int i = 0; i <= 2 * g; ++i)
            if (valuation(Pt.coeff(i), P) < std::min(cap, 4 * g + 2 - 2 * i)) return false;
        return true;
    }

    bool search(int level)
    {
        int const top = use_h ? 2 * g + 1 : 2;
        if (level == top) return conditions(infinite_valuation);
        /* variables with a digit at this level: index 0 is r, j + 1 is h_j */
        std::vector<int> act;
        if (level < 2) act.push_back(0);
        if (use_h)
            for (int j = 0; j <= g; ++j)
                if (level < 2 * g + 1 - 2 * j) act.push_back(j + 1);
        kelem const scale = pow(pi, static_cast<long>(level));
        size_t const q = lifts.size();
        std::vector<size_t> idx(act.size(), 0);
        auto var = [&](int i) -> kelem & { return i == 0 ? r : h[i - 1]; };
        std::vector<kelem> saved;
        for (int i : act) saved.push_back(var(i));
        for (;;) {
            for (size_t t = 0; t < act.size(); ++t) var(act[t]) = saved[t] + lifts[idx[t]] * scale;
            if (conditions(level + 1) && search(level + 1)) return true;
            size_t t = 0;
            while (t < idx.size() && ++idx[t] == q) idx[t++] = 0;
            if (t == idx.size()) break;
        }
        for (size_t t = 0; t < act.size(); ++t) var(act[t]) = saved[t];
        return false;
    }
};

std::vector<kelem> residue_lifts(residue_field const & k);

std::optional<diag_change> pointed_step(weierstrass_eq const & E, prime_ideal const & P, std::vector<kelem> & lifts,
                                        kelem const & pi)
{
    int const g = E.genus;
    diag_change pre;
    weierstrass_eq cur = E;
    bool use_h = true;
    if (!residue_char_two(P)) {
        /* y -> y - Q/2 removes Q; then only r matters */
        pre.h = E.Q * kelem(rat(-1, 2));
        cur = transform(E, pre.transform(g));
        use_h = false;
    }
    pointed_search s{cur, P, lifts, pi, use_h, g, kelem(), std::vector<kelem>(g + 1)};
    bool found;
    if (!use_h && !mpz_divisible_p(integer(2 * g + 1).get_mpz_t(), P.p.get_mpz_t())) {
        s.r = -cur.P.coeff(2 * g) / kelem(2 * g + 1);
        found = s.conditions(infinite_valuation);
    } else {
        /* only reached when p divides 2(2g+1), so the residue field is small */
        if (lifts.empty()) lifts = residue_lifts(residue_field(P));
        found = s.search(0);
    }
    if (!found) return std::nullopt;
    diag_change step;
    step.a = pi * pi;
    step.r = s.r;
    step.b = pow(pi, 2L * g + 1);
    step.h = poly(s.h).substitute_linear(1, -s.r);
    return pre.then(step);
}

/* the normalized model at the vertex x = N x_s, in the form x = a x_s + r */
diag_change vertex_change(weierstrass_eq const & E, prime_ideal const & P, mat2 const & N)
{
    /* column operations over O_P clear the bottom-left entry */
    kelem al = N.a, be = N.b, ga = N.c, de = N.d;
    if (!ga.is_zero()) {
        if (de.is_zero() || valuation(ga, P) < valuation(de, P)) {
            std::swap(al, be);
            std::swap(ga, de);
        }
        if (!ga.is_zero()) {
            al -= be * ga / de;
            ga = 0;
        }
    }
    diag_change ch;
    ch.a = al / de;
    ch.r = be / de;
    weierstrass_eq const moved = transform(E, ch.transform(E.genus));
    return ch.then(normalize_y(moved, P));
}

std::vector<kelem> residue_lifts(residue_field const & k)
{
    std::vector<kelem> out;
    for (integer i = 0; i < k.size(); ++i) out.push_back(k.lift(k.element(i)));
    return out;
}

} // namespace

local_model minimize_pointed_at(weierstrass_eq const & E, prime_ideal const & P)
{
    if (!E.has_pointed_shape())
        throw error(errc::degree_violation, "pointed minimization needs P monic of degree 2g+1 and deg Q <= g");
    validate(E);
    int const g = E.genus;
    kelem const pi = local_uniformizer(P);

    long m = 0;
    for (int j = 0; j <= g; ++j) {
        int v = valuation(E.Q.coeff(j), P);
        if (v != infinite_valuation) m = std::max(m, ceil_div(-v, 2 * g + 1 - 2 * j));
    }
    for (int i = 0; i <= 2 * g; ++i) {
        int v = valuation(E.P.coeff(i), P);
        if (v != infinite_valuation) m = std::max(m, ceil_div(-v, 4 * g + 2 - 2 * i));
    }
    diag_change ch;
    ch.a = pow(pi, -2 * m);
    ch.b = pow(pi, -(2L * g + 1) * m);
    weierstrass_eq cur = transform(E, ch.transform(g));
    int vd = vdisc_of(cur, P);

    std::vector<kelem> lifts;
    long steps = 0;
    while (vd >= 4 * g * (2 * g + 1)) {
        auto step = pointed_step(cur, P, lifts, pi);
        if (!step) break;
        ch = ch.then(*step);
        cur = transform(cur, step->transform(g));
        vd -= 4 * g * (2 * g + 1);
        ++steps;
    }
    local_model out = finish(E, P, ch);
    out.equation.pointed = true;
    out.nodes = steps;
    if (out.vdisc != vd) throw std::logic_error("pointed minimization: discriminant bookkeeping mismatch");
    check_local_model(E, out);
    return out;
}

long default_node_cap()
{
    if (char const * s = std::getenv("WEIER_NODE_CAP")) {
        char * end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return v;
    }
    return 200000;
}

local_model minimize_at(weierstrass_eq const & E, prime_ideal const & P, long node_cap)
{
    validate(E);
    int const g = E.genus;
    int const unit = 2 * (2 * g + 1);
    kelem const pi = local_uniformizer(P);
    residue_field k(P);

    struct node
    {
        mat2 N;
        weierstrass_eq E;
        int vd;
        bool root;
    };
    int const vin = vdisc_of(E, P);
    diag_change const d0 = normalize_y(E, P);
    node root{mat2{}, transform(E, d0.transform(g)), vin - 2 * unit * valuation(d0.b, P), true};

    local_model out;
    int best = root.vd;
    mat2 best_N;
    out.improvements.push_back(best);
    std::vector<node> stack{root};
    long nodes = 0;
    while (!stack.empty()) {
        node cur = std::move(stack.back());
        stack.pop_back();
        if (++nodes > node_cap)
            throw error(errc::search_budget_exceeded,
                        "model search exceeded " + std::to_string(node_cap) + " vertices");
        if (cur.vd < best) {
            best = cur.vd;
            best_N = cur.N;
            out.improvements.push_back(best);
        }
        if (best < unit) break;

        binary_form const F = cur.E.F_form();
        int const c = form_valuation(F, P);
        int const w = cur.vd - unit * c;
        auto const fbar_form = reduce_form(k, F.scaled(pow(pi, -static_cast<long>(c))));
        residue_field::rpoly fbar(fbar_form.begin(), fbar_form.end());
        k.trim(fbar);
        int const n = 2 * g + 2;

        auto keep = [&](int m) { return m > g + 1 || w + unit * (g + 1 - m) < best; };
        auto push = [&](mat2 const & A) {
            binary_form const Pf = act_on_form(cur.E.P_form(), A), Qf = act_on_form(cur.E.Q_form(), A);
            weierstrass_eq raw = weierstrass_eq::from_forms(E.field, Pf, Qf);
            diag_change const d = normalize_y(raw, P);
            int const vd = cur.vd + (g + 1) * unit - 2 * unit * valuation(d.b, P);
            stack.push_back({cur.N * A, transform(raw, d.transform(g)), vd, false});
        };

        std::vector<std::pair<residue_field::elt, int>> dirs;
        if (keep(0)) {
            for (integer i = 0; i < k.size(); ++i) {
                auto e = k.element(i);
                dirs.push_back({e, k.is_zero(k.eval(fbar, e)) ? k.multiplicity(fbar, e) : 0});
            }
        } else {
            for (auto const & e : k.roots(fbar)) dirs.push_back({e, k.multiplicity(fbar, e)});
        }
        for (auto const & [e, m] : dirs)
            if (keep(m)) push(mat2{pi, k.lift(e), 0, 1});
        if (cur.root) {
            int const m = n - static_cast<int>(fbar.size()) + 1;
            if (keep(m)) push(mat2{0, 1, pi, 0});
        }
    }

    diag_change const ch = vertex_change(E, P, best_N);
    local_model res = finish(E, P, ch);
    res.nodes = nodes;
    res.improvements = std::move(out.improvements);
    if (res.vdisc != best) throw std::logic_error("model search: vertex conversion changed the discriminant");
    check_local_model(E, res);
    return res;
}

local_model relocalize(weierstrass_eq const & E, eq_transform const & T, local_model const & m)
{
    weierstrass_eq const Et = transform(E, T);
    mat2 const N = T.m * mat2{m.change.a, m.change.r, 0, 1};
    local_model out = finish(Et, m.prime, vertex_change(Et, m.prime, N));
    if (out.vdisc != m.vdisc) throw std::logic_error("relocalize: the model changed");
    check_local_model(Et, out);
    return out;
}

local_model identity_model(weierstrass_eq const & E, prime_ideal const & P)
{
    return model_from_change(E, P, diag_change{});
}

local_model model_from_change(weierstrass_eq const & E, prime_ideal const & P, diag_change const & c)
{
    local_model m = finish(E, P, c);
    if (poly_valuation(m.equation.P, P) < 0 || poly_valuation(m.equation.Q, P) < 0)
        throw error(errc::non_integral_input, "local equation is not integral at the prime");
    if (!normalize_y(m.equation, P).is_identity())
        throw error(errc::non_integral_input, "local equation is not normal at the prime");
    check_local_model(E, m);
    return m;
}

} // namespace weier
