#include "doctest.h"

#include "weier/batch.hpp"

using namespace weier;

TEST_CASE("fundamental discriminants")
{
    std::vector<long> got;
    for (long D = -1; D >= -24; --D)
        if (is_fundamental_discriminant(D)) got.push_back(D);
    CHECK(got == std::vector<long>{-3, -4, -7, -8, -11, -15, -19, -20, -23, -24});
}

TEST_CASE("class number table: parallel equals serial")
{
    auto par = class_number_table(-400, -3, true);
    auto ser = class_number_table(-400, -3, false);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].D == ser[i].D);
        CHECK(par[i].h == ser[i].h);
        CHECK(par[i].structure == ser[i].structure);
    }
    CHECK_THROWS(class_number_table(-10, 1, false));
}

TEST_CASE("corpus analysis: parallel equals serial")
{
    corpus_counts c;
    c.random = 4;
    c.pointed = 4;
    c.twists = 1;
    c.covers = 1;
    c.genera = {1, 2};
    auto const C = generate_corpus(5, c);
    auto par = analyze_corpus(C, true);
    auto ser = analyze_corpus(C, false);
    REQUIRE(par.size() == C.size());
    for (size_t i = 0; i < par.size(); ++i) {
        INFO(C[i].name);
        CHECK(par[i].name == C[i].name);
        CHECK(par[i].failure == ser[i].failure);
        REQUIRE(par[i].report.has_value() == ser[i].report.has_value());
        if (!par[i].report) continue;
        CHECK(par[i].report->delta == ser[i].report->delta);
        CHECK(par[i].report->a == ser[i].report->a);
        CHECK(par[i].report->b == ser[i].report->b);
        CHECK(par[i].report->synthesized == ser[i].report->synthesized);
    }
}

TEST_CASE("per-prime minimization: parallel equals serial")
{
    field_spec const f = field_spec::imaginary_quadratic(-23);
    weierstrass_eq const E(f, 2, poly({kelem(rat(1, 6)), kelem(3), 0, 0, 0, 0, kelem(27)}), poly({kelem(1)}));
    auto primes = bad_primes(E);
    assemble_options p, s;
    s.parallel = false;
    auto a = local_models(E, primes, p), b = local_models(E, primes, s);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].prime == b[i].prime);
        CHECK(a[i].vdisc == b[i].vdisc);
        CHECK(a[i].equation == b[i].equation);
    }
}
