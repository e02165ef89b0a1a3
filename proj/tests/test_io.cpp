#include "doctest.h"

#include "weier/batch.hpp"
#include "weier/error.hpp"
#include "weier/io.hpp"

using namespace weier;

namespace {

errc code_of(std::function<void()> const & f)
{
    try {
        f();
    } catch (error const & e) {
        return e.code();
    }
    FAIL("no error raised");
    return errc::not_found;
}

corpus_counts small_counts()
{
    corpus_counts c;
    c.random = 3;
    c.pointed = 3;
    c.twists = 1;
    c.covers = 1;
    c.genera = {1, 2};
    return c;
}

} // namespace

TEST_CASE("field and element encoding")
{
    CHECK(field_to_json(field_spec::rationals()) == "Q");
    CHECK(field_to_json(field_spec::imaginary_quadratic(-23)) == "Q(sqrt(-23))");
    CHECK(field_from_json("Q(sqrt(-5))") == field_spec::imaginary_quadratic(-5));
    CHECK(field_from_json(json(-7)) == field_spec::imaginary_quadratic(-7));
    CHECK(field_from_json(json{{"d", 0}}) == field_spec::rationals());
    CHECK(code_of([] { field_from_json("Q(sqrt(x))"); }) == errc::malformed_input);
    CHECK(code_of([] { field_from_json(json(-4)); }) == errc::unsupported_field);

    field_spec const f = field_spec::imaginary_quadratic(-5);
    kelem const x(rat(3, 4), rat(-2), f);
    CHECK(elem_to_json(x, f) == json::array({"3/4", "-2"}));
    CHECK(elem_from_json(elem_to_json(x, f), f) == x);
    CHECK(elem_to_json(kelem(rat(-6, 4)), field_spec::rationals()) == "-3/2");
    CHECK(elem_from_json("5", field_spec::rationals()) == kelem(5));
    CHECK(code_of([] { elem_from_json("1/0", field_spec::rationals()); }) == errc::malformed_input);
    CHECK(code_of([] { elem_from_json(json::array({"1", "1"}), field_spec::rationals()); }) == errc::field_mismatch);
}

TEST_CASE("curve round trip")
{
    json const j = json::parse(R"({"field":"Q","genus":1,"P":["0","0","0","1"],"Q":["1"],"pointed":false})");
    weierstrass_eq const E = curve_from_json(j);
    CHECK(E.genus == 1);
    CHECK(discriminant(E) == kelem(-27));
    CHECK(curve_from_json(curve_to_json(E)) == E);
    CHECK(curve_to_json(E)["schema"] == schema_version);

    CHECK(code_of([] { curve_from_json(json::parse(R"({"field":"Q","P":["1"]})")); }) == errc::malformed_input);
    CHECK(code_of([] { curve_from_json(json::parse(R"({"field":"Q","genus":1,"P":"x"})")); }) == errc::malformed_input);
    CHECK(code_of([] { curve_from_json(json::parse(R"({"schema":9,"field":"Q","genus":1,"P":["1"]})")); })
          == errc::malformed_input);
    CHECK(code_of([] { curve_from_json(json::parse(R"({"field":"Q","genus":1,"P":["1","0","0","0","0","1"]})")); })
          == errc::degree_violation);

    /* every corpus curve survives a round trip through text */
    for (auto const & e : generate_corpus(3, small_counts())) {
        std::string const text = curve_to_json(e.eq).dump();
        CHECK(curve_from_json(json::parse(text)) == e.eq);
    }
}

TEST_CASE("model overrides round trip")
{
    corpus_entry const e = w_class_example();
    json j = curve_to_json(e.eq);
    j["models"] = json::array({override_to_json(e.overrides[0])});
    auto ov = overrides_from_json(j);
    REQUIRE(ov.size() == 1);
    CHECK(ov[0].prime == e.overrides[0].prime);
    CHECK(ov[0].change.a == kelem(9));
    CHECK(ov[0].change.b == kelem(3));
    j["models"][0]["index"] = 5;
    CHECK(code_of([&] { overrides_from_json(j); }) == errc::malformed_input);
}

TEST_CASE("report encoding")
{
    weierstrass_eq const E(field_spec::rationals(), 2, poly({kelem(1), 0, 0, 0, 0, kelem(1)}), poly());
    model_report R = assemble(E);
    R.synthesized = synthesize(R);
    json const j = report_to_json(R);
    CHECK(j["schema"] == schema_version);
    CHECK(j["bad_primes"].size() == 2);
    CHECK(j["bad_primes"][0]["prime"]["p"] == "2");
    CHECK(j["bad_primes"][0]["vdisc"] == 8);
    CHECK(j["delta_C"]["norm"] == "800000");
    CHECK(j["verdicts"]["exists_integral_eq"] == true);
    CHECK(curve_from_json(j["synthesized"]) == *R.synthesized);
}

TEST_CASE("corpus generation")
{
    SUBCASE("seed 0, one genus-1 curve")
    {
        corpus_counts c;
        c.random = 1;
        c.pointed = c.twists = c.covers = 0;
        c.genera = {1};
        c.fields = {0};
        c.power_family = c.w_class_curve = false;
        auto C = generate_corpus(0, c);
        REQUIRE(C.size() == 1);
        CHECK(C[0].eq.genus == 1);
        CHECK_NOTHROW(validate(C[0].eq));
    }
    SUBCASE("deterministic")
    {
        auto dump = [](std::vector<corpus_entry> const & C) {
            std::string s;
            for (auto const & e : C) s += e.name + curve_to_json(e.eq).dump() + "\n";
            return s;
        };
        CHECK(dump(generate_corpus(7, small_counts())) == dump(generate_corpus(7, small_counts())));
        CHECK(dump(generate_corpus(7, small_counts())) != dump(generate_corpus(8, small_counts())));
    }
    SUBCASE("contains the nontrivial Weierstrass class")
    {
        auto C = generate_corpus(1, small_counts());
        auto it = std::find_if(C.begin(), C.end(), [](corpus_entry const & e) { return e.family == "w_class"; });
        REQUIRE(it != C.end());
        CHECK(it->eq.field == field_spec::imaginary_quadratic(-5));
        assemble_options opt;
        opt.overrides = it->overrides;
        model_report R = assemble(it->eq, opt);
        CHECK_FALSE(R.v.w_trivial);
        CHECK(compute_class_group(it->eq.field).order_of(R.class_w) == 2);
    }
}
