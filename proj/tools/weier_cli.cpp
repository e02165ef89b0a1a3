#include "weier/batch.hpp"
#include "weier/error.hpp"
#include "weier/factor.hpp"
#include "weier/io.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace weier;

namespace {

enum exit_code { exit_ok = 0, exit_malformed = 1, exit_obstruction = 2, exit_budget = 3 };

int exit_for(errc c)
{
    switch (c) {
        case errc::obstruction_non_square_bundle:
        case errc::obstruction_w_class: return exit_obstruction;
        case errc::search_budget_exceeded: return exit_budget;
        default: return exit_malformed;
    }
}

void emit(json const & j)
{
    std::cout << j.dump(2) << "\n";
}

/* inline JSON when it starts with '{', "-" for stdin, a path otherwise */
json read_input(std::string const & src)
{
    std::string text;
    if (!src.empty() && src.front() == '{') {
        text = src;
    } else if (src == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(src);
        if (!in) throw error(errc::malformed_input, "cannot read '" + src + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (json::parse_error const & e) {
        throw error(errc::malformed_input, std::string("bad JSON: ") + e.what());
    }
}

/* a JSON value, or the text itself as a string */
json read_input_value(std::string const & text)
{
    try {
        return json::parse(text);
    } catch (json::parse_error const &) {
        return json(text);
    }
}

struct curve_args
{
    std::string input;
    std::string field;
    bool pointed = false;
};

void add_curve_args(CLI::App * sub, curve_args & a)
{
    sub->add_option("input", a.input, "curve JSON: a path, '-' for stdin, or inline text")->required();
    sub->add_option("--field", a.field, "field of the curve, e.g. Q or Q(sqrt(-5)); overrides the input");
}

json load_curve_json(curve_args const & a)
{
    json j = read_input(a.input);
    if (!j.is_object()) throw error(errc::malformed_input, "curve must be an object");
    if (!a.field.empty()) j["field"] = a.field;
    if (a.pointed) j["pointed"] = true;
    return j;
}

prime_ideal pick_prime(field_spec f, long p, int index)
{
    if (p < 2) throw error(errc::malformed_input, "prime must be at least 2");
    integer const P(std::to_string(p));
    if (factor_integer(P).size() != 1 || factor_integer(P)[0].second != 1)
        throw error(errc::malformed_input, std::to_string(p) + " is not prime");
    auto primes = factor_rational_prime(f, P);
    if (index < 0 || index >= static_cast<int>(primes.size()))
        throw error(errc::malformed_input, "prime index out of range");
    return primes[index].first;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Minimal Weierstrass equations of hyperelliptic curves over Q and imaginary quadratic fields"};
    app.require_subcommand(1);
    long node_cap = default_node_cap();
    long mobius_budget = default_mobius_budget;

    curve_args an;
    auto * analyze = app.add_subcommand("analyze", "global report: ideals, classes, verdicts, synthesis");
    add_curve_args(analyze, an);
    analyze->add_flag("--pointed", an.pointed, "analyze as a pointed equation");
    analyze->add_option("--mobius-budget", mobius_budget, "Moebius candidates tried by synthesis")->check(CLI::PositiveNumber);
    analyze->add_option("--node-cap", node_cap, "vertex budget per prime")->check(CLI::PositiveNumber);

    curve_args mn;
    long mp = 0;
    int mindex = 0;
    auto * minimize = app.add_subcommand("minimize", "local minimal models at one prime or at every bad prime");
    add_curve_args(minimize, mn);
    minimize->add_flag("--pointed", mn.pointed, "pointed minimization");
    minimize->add_option("--prime,-p", mp, "rational prime below the prime ideal");
    minimize->add_option("--index", mindex, "which prime above p, ordered by root");
    minimize->add_option("--node-cap", node_cap, "vertex budget")->check(CLI::PositiveNumber);

    long cd = 0;
    auto * classgroup = app.add_subcommand("classgroup", "class group of Q(sqrt(d))");
    classgroup->add_option("-d", cd, "squarefree d < 0 (or 0 for Q)")->required()->allow_extra_args(false);

    curve_args dc;
    auto * disc = app.add_subcommand("disc", "discriminant of a Weierstrass equation");
    add_curve_args(disc, dc);

    curve_args tw;
    std::string delta;
    auto * twist = app.add_subcommand("twist", "quadratic twist of a pointed equation with Q = 0");
    add_curve_args(twist, tw);
    twist->add_option("--delta", delta, "twisting element as JSON, e.g. \"4\" or [\"1\",\"1\"]")->required();

    curve_args cv;
    int cover_d = 2;
    std::string alpha = "1";
    auto * cover = app.add_subcommand("cover", "d-th power cover y^2 + Q(a x^d) y = P(a x^d)");
    add_curve_args(cover, cv);
    cover->add_option("-d", cover_d, "degree d >= 1")->required();
    cover->add_option("--alpha", alpha, "alpha as JSON, default 1");

    long order = 2, bound = 1000;
    auto * findfield = app.add_subcommand("findfield", "first Q(sqrt(d)), d = -1, -2, ..., with a class of exact order n");
    findfield->add_option("-n", order, "order")->required()->check(CLI::PositiveNumber);
    findfield->add_option("--bound", bound, "largest |d| scanned")->check(CLI::PositiveNumber);

    unsigned long long seed = 0;
    std::string out_dir;
    bool analyze_all = false;
    auto * corpus = app.add_subcommand("corpus", "deterministic test corpus");
    corpus->add_option("--seed", seed, "generator seed");
    corpus->add_option("--out", out_dir, "write one curve per file into this directory");
    corpus->add_flag("--analyze", analyze_all, "analyze every curve and print a summary");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int const rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_malformed;
    }

    try {
        if (*analyze) {
            json const j = load_curve_json(an);
            weierstrass_eq const E = curve_from_json(j);
            assemble_options opt;
            opt.pointed = E.pointed;
            opt.node_cap = node_cap;
            opt.overrides = overrides_from_json(j);
            model_report R = assemble(E, opt);
            int rc = exit_ok;
            std::string status = "ok";
            try {
                R.synthesized = synthesize(R, mobius_budget);
            } catch (error const & e) {
                rc = exit_for(e.code());
                if (rc == exit_malformed) throw;
                status = errc_name(e.code());
            }
            json out = report_to_json(R);
            out["status"] = status;
            emit(out);
            return rc;
        }
        if (*minimize) {
            json const j = load_curve_json(mn);
            weierstrass_eq const E = curve_from_json(j);
            std::vector<prime_ideal> primes;
            if (mp) primes.push_back(pick_prime(E.field, mp, mindex));
            else primes = bad_primes(E);
            assemble_options opt;
            opt.pointed = E.pointed;
            opt.node_cap = node_cap;
            json out = json::array();
            for (auto const & m : local_models(E, primes, opt)) out.push_back(local_model_to_json(m));
            emit(out);
            return exit_ok;
        }
        if (*classgroup) {
            field_spec const f = cd == 0 ? field_spec::rationals() : field_spec::imaginary_quadratic(cd);
            emit(class_group_to_json(compute_class_group(f)));
            return exit_ok;
        }
        if (*disc) {
            weierstrass_eq const E = curve_from_json(load_curve_json(dc));
            emit(elem_to_json(discriminant(E), E.field));
            return exit_ok;
        }
        if (*twist) {
            weierstrass_eq const E = curve_from_json(load_curve_json(tw));
            kelem const dl = elem_from_json(read_input_value(delta), E.field);
            emit(curve_to_json(quadratic_twist(E, dl)));
            return exit_ok;
        }
        if (*cover) {
            weierstrass_eq const E = curve_from_json(load_curve_json(cv));
            if (cover_d < 1) throw error(errc::malformed_input, "d must be positive");
            kelem const al = elem_from_json(read_input_value(alpha), E.field);
            if (al.is_zero()) throw error(errc::malformed_input, "alpha must be non-zero");
            emit(curve_to_json(power_cover(E, cover_d, al)));
            return exit_ok;
        }
        if (*findfield) {
            field_spec const f = find_field_with_class_element_of_order(order, bound);
            class_group const G = compute_class_group(f);
            json out;
            out["d"] = f.d;
            out["field"] = field_to_json(f);
            out["h"] = G.order();
            out["structure"] = G.structure;
            emit(out);
            return exit_ok;
        }
        if (*corpus) {
            auto const C = generate_corpus(seed);
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                for (auto const & e : C) {
                    json j = curve_to_json(e.eq);
                    if (!e.overrides.empty()) {
                        j["models"] = json::array();
                        for (auto const & o : e.overrides) j["models"].push_back(override_to_json(o));
                    }
                    std::ofstream f(std::filesystem::path(out_dir) / (e.name + ".json"));
                    f << j.dump(2) << "\n";
                }
            }
            json out = json::array();
            std::vector<corpus_result> results;
            if (analyze_all) results = analyze_corpus(C, true, mobius_budget, node_cap);
            for (size_t i = 0; i < C.size(); ++i) {
                json e;
                e["name"] = C[i].name;
                e["family"] = C[i].family;
                if (out_dir.empty()) e["curve"] = curve_to_json(C[i].eq);
                if (analyze_all) {
                    auto const & r = results[i];
                    e["status"] = r.failure ? errc_name(*r.failure) : "ok";
                    if (r.report) e["verdicts"] = verdicts_to_json(r.report->v);
                }
                out.push_back(e);
            }
            emit(out);
            return exit_ok;
        }
    } catch (error const & e) {
        json out;
        out["error"] = errc_name(e.code());
        out["message"] = e.what();
        emit(out);
        return exit_for(e.code());
    } catch (std::exception const & e) {
        json out;
        out["error"] = "MalformedInput";
        out["message"] = e.what();
        emit(out);
        return exit_malformed;
    }
    return exit_malformed;
}
