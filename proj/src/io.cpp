#include "weier/io.hpp"
#include "weier/error.hpp"

namespace weier {

namespace {

[[noreturn]] void malformed(std::string const & what)
{
    throw error(errc::malformed_input, what);
}

std::string istr(integer const & n)
{
    return n.get_str();
}

rat rat_from(json const & j)
{
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return rat(integer(std::to_string(j.get<long long>())));
    malformed("expected a rational string, got " + j.dump());
}

long long int_field(json const & j, char const * key)
{
    if (!j.contains(key) || !j[key].is_number_integer()) malformed(std::string("missing integer field '") + key + "'");
    return j[key].get<long long>();
}

} // namespace

json field_to_json(field_spec f)
{
    if (f.is_rational()) return "Q";
    return "Q(sqrt(" + std::to_string(f.d) + "))";
}

field_spec field_from_json(json const & j)
{
    long d = 0;
    if (j.is_number_integer()) {
        d = j.get<long>();
    } else if (j.is_object() && j.contains("d") && j["d"].is_number_integer()) {
        d = j["d"].get<long>();
    } else if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Q") return field_spec::rationals();
        std::string const pre = "Q(sqrt(", post = "))";
        if (s.size() <= pre.size() + post.size() || s.compare(0, pre.size(), pre) || s.compare(s.size() - 2, 2, post))
            malformed("bad field '" + s + "'");
        try {
            size_t used = 0;
            std::string body = s.substr(pre.size(), s.size() - pre.size() - post.size());
            d = std::stol(body, &used);
            if (used != body.size()) malformed("bad field '" + s + "'");
        } catch (std::logic_error const &) {
            malformed("bad field '" + s + "'");
        }
    } else {
        malformed("bad field " + j.dump());
    }
    if (d == 0) return field_spec::rationals();
    try {
        return field_spec::imaginary_quadratic(d);
    } catch (error const & e) {
        if (e.code() == errc::unsupported_field) throw;
        malformed(e.what());
    } catch (std::exception const & e) {
        malformed(e.what());
    }
}

json elem_to_json(kelem const & x, field_spec f)
{
    if (f.is_rational()) return rat_to_string(x.a);
    return json::array({rat_to_string(x.a), rat_to_string(x.b)});
}

kelem elem_from_json(json const & j, field_spec f)
{
    if (j.is_array()) {
        if (j.size() != 2) malformed("quadratic coefficient needs two entries: " + j.dump());
        rat a = rat_from(j[0]), b = rat_from(j[1]);
        if (f.is_rational() && sgn(b) != 0) throw error(errc::field_mismatch, "irrational coefficient over Q");
        if (f.is_rational()) return kelem(a);
        return kelem(a, b, f);
    }
    return kelem(rat_from(j));
}

json poly_to_json(poly const & p, field_spec f)
{
    json a = json::array();
    for (auto const & c : p.coeffs()) a.push_back(elem_to_json(c, f));
    return a;
}

poly poly_from_json(json const & j, field_spec f)
{
    if (!j.is_array()) malformed("polynomial must be an array, got " + j.dump());
    std::vector<kelem> c;
    for (auto const & x : j) c.push_back(elem_from_json(x, f));
    return poly(c);
}

json curve_to_json(weierstrass_eq const & E)
{
    json j;
    j["schema"] = schema_version;
    j["field"] = field_to_json(E.field);
    j["genus"] = E.genus;
    j["P"] = poly_to_json(E.P, E.field);
    j["Q"] = poly_to_json(E.Q, E.field);
    j["pointed"] = E.pointed;
    return j;
}

weierstrass_eq curve_from_json(json const & j)
{
    if (!j.is_object()) malformed("curve must be an object");
    if (j.contains("schema") && (!j["schema"].is_number_integer() || j["schema"].get<int>() != schema_version))
        malformed("unsupported schema " + j["schema"].dump());
    if (!j.contains("field")) malformed("missing 'field'");
    field_spec const f = field_from_json(j["field"]);
    int const g = static_cast<int>(int_field(j, "genus"));
    if (!j.contains("P")) malformed("missing 'P'");
    poly const P = poly_from_json(j["P"], f);
    poly const Q = j.contains("Q") ? poly_from_json(j["Q"], f) : poly();
    bool pointed = false;
    if (j.contains("pointed")) {
        if (!j["pointed"].is_boolean()) malformed("'pointed' must be a boolean");
        pointed = j["pointed"].get<bool>();
    }
    return weierstrass_eq(f, g, P, Q, pointed);
}

std::vector<local_override> overrides_from_json(json const & j)
{
    std::vector<local_override> out;
    if (!j.contains("models")) return out;
    if (!j["models"].is_array()) malformed("'models' must be an array");
    field_spec const f = field_from_json(j["field"]);
    for (auto const & m : j["models"]) {
        if (!m.is_object()) malformed("model entry must be an object");
        long long const p = int_field(m, "p");
        if (p < 2) malformed("bad prime in model entry");
        auto primes = factor_rational_prime(f, integer(std::to_string(p)));
        long long const idx = m.contains("index") ? int_field(m, "index") : 0;
        if (idx < 0 || idx >= static_cast<long long>(primes.size())) malformed("prime index out of range");
        local_override o;
        o.prime = primes[idx].first;
        if (m.contains("a")) o.change.a = elem_from_json(m["a"], f);
        if (m.contains("r")) o.change.r = elem_from_json(m["r"], f);
        if (m.contains("b")) o.change.b = elem_from_json(m["b"], f);
        if (m.contains("h")) o.change.h = poly_from_json(m["h"], f);
        if (o.change.a.is_zero() || o.change.b.is_zero()) malformed("model entry with a zero scale");
        out.push_back(std::move(o));
    }
    return out;
}

json override_to_json(local_override const & o)
{
    field_spec const f = o.prime.field;
    auto primes = factor_rational_prime(f, o.prime.p);
    size_t idx = 0;
    while (idx < primes.size() && !(primes[idx].first == o.prime)) ++idx;
    json j;
    j["p"] = std::stoll(istr(o.prime.p));
    j["index"] = idx;
    j["a"] = elem_to_json(o.change.a, f);
    j["r"] = elem_to_json(o.change.r, f);
    j["b"] = elem_to_json(o.change.b, f);
    j["h"] = poly_to_json(o.change.h, f);
    return j;
}

json ideal_to_json(frac_ideal const & I)
{
    json j;
    j["den"] = istr(I.den);
    j["hnf"] = json::array({istr(I.a), istr(I.b), istr(I.c)});
    j["norm"] = rat_to_string(I.norm());
    return j;
}

json prime_to_json(prime_ideal const & P)
{
    json j;
    j["p"] = istr(P.p);
    j["type"] = splitting_name(P.type);
    j["e"] = P.e;
    j["f"] = P.f;
    j["norm"] = istr(P.norm());
    j["ideal"] = ideal_to_json(P.ideal);
    return j;
}

json qform_to_json(qform const & f)
{
    return json::array({istr(f.A), istr(f.B), istr(f.C)});
}

json class_group_to_json(class_group const & G)
{
    json j;
    j["field"] = field_to_json(G.field);
    j["D"] = G.D;
    j["h"] = G.order();
    j["structure"] = G.structure;
    json forms = json::array();
    for (auto const & f : G.forms) forms.push_back(qform_to_json(f));
    j["forms"] = forms;
    return j;
}

json local_model_to_json(local_model const & m)
{
    field_spec const f = m.prime.field;
    json j;
    j["prime"] = prime_to_json(m.prime);
    j["a"] = elem_to_json(m.change.a, f);
    j["r"] = elem_to_json(m.change.r, f);
    j["b"] = elem_to_json(m.change.b, f);
    j["h"] = poly_to_json(m.change.h, f);
    j["va"] = m.va;
    j["vb"] = m.vb;
    j["vdisc"] = m.vdisc;
    j["nodes"] = m.nodes;
    j["improvements"] = m.improvements;
    j["equation"] = curve_to_json(m.equation);
    return j;
}

json verdicts_to_json(verdicts const & v)
{
    json j;
    j["Z_is_P1"] = v.Z_is_P1;
    j["delta_principal"] = v.delta_principal;
    j["det_omega_free"] = v.det_omega_free;
    j["w_trivial"] = v.w_trivial;
    j["thm_main_1a"] = v.thm_main_1a;
    j["thm_main_1b"] = v.thm_main_1b;
    j["thm_main_2"] = v.thm_main_2;
    j["thm_main_3"] = v.thm_main_3;
    j["thm_main_4"] = v.thm_main_4;
    j["exists_integral_eq"] = v.exists_integral_eq;
    j["sadek"] = v.sadek;
    j["pointed_integral"] = v.pointed_integral;
    return j;
}

json report_to_json(model_report const & R)
{
    field_spec const f = R.input.field;
    json j;
    j["schema"] = schema_version;
    j["kind"] = "model_report";
    j["field"] = field_to_json(f);
    j["genus"] = R.input.genus;
    j["pointed"] = R.pointed;
    j["input"] = curve_to_json(R.input);
    j["discriminant"] = elem_to_json(discriminant(R.input), f);
    json locals = json::array();
    for (auto const & m : R.locals) locals.push_back(local_model_to_json(m));
    j["bad_primes"] = locals;
    j["r"] = elem_to_json(R.r, f);
    j["h"] = poly_to_json(R.h, f);
    j["a"] = ideal_to_json(R.a);
    j["b"] = ideal_to_json(R.b);
    j["delta_C"] = ideal_to_json(R.delta);
    if (R.pointed) j["u"] = ideal_to_json(R.u);
    j["class_number"] = R.class_number;
    j["structure"] = R.structure;
    json cl;
    cl["a"] = qform_to_json(R.class_a);
    cl["b"] = qform_to_json(R.class_b);
    cl["w"] = qform_to_json(R.class_w);
    cl["det_omega"] = qform_to_json(R.class_det_omega);
    cl["delta_C"] = qform_to_json(R.class_delta);
    if (R.pointed) cl["u"] = qform_to_json(R.class_u);
    j["classes"] = cl;
    j["verdicts"] = verdicts_to_json(R.v);
    j["synthesized"] = R.synthesized ? curve_to_json(*R.synthesized) : json(nullptr);
    return j;
}

} // namespace weier
