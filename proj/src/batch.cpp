#include "weier/batch.hpp"

namespace weier {

namespace {

corpus_result analyze_one(corpus_entry const & e, long mobius_budget, long node_cap)
{
    corpus_result out;
    out.name = e.name;
    try {
        assemble_options opt;
        opt.pointed = e.eq.pointed;
        opt.node_cap = node_cap;
        opt.overrides = e.overrides;
        /* the batch is already spread over threads */
        opt.parallel = false;
        out.report = assemble(e.eq, opt);
    } catch (error const & x) {
        out.failure = x.code();
        out.message = x.what();
        return out;
    }
    if (out.report->v.exists_integral_eq || (out.report->pointed && out.report->v.pointed_integral)) {
        try {
            out.report->synthesized = synthesize(*out.report, mobius_budget);
        } catch (error const & x) {
            out.failure = x.code();
            out.message = x.what();
        }
    }
    return out;
}

} // namespace

std::vector<corpus_result> analyze_corpus(std::vector<corpus_entry> const & entries, bool parallel, long mobius_budget,
                                          long node_cap)
{
    long const n = static_cast<long>(entries.size());
    std::vector<corpus_result> out(n);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) out[i] = analyze_one(entries[i], mobius_budget, node_cap);
    } else {
        for (long i = 0; i < n; ++i) out[i] = analyze_one(entries[i], mobius_budget, node_cap);
    }
    return out;
}

bool is_fundamental_discriminant(long D)
{
    if (D == 1 || D == 0) return false;
    long const r = ((D % 4) + 4) % 4;
    if (r == 1) return is_squarefree(D);
    if (r != 0) return false;
    long const m = D / 4, rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

std::vector<class_number_row> class_number_table(long lo, long hi, bool parallel)
{
    if (hi >= 0 || lo > hi) throw std::invalid_argument("class_number_table: need lo <= hi < 0");
    std::vector<long> ds;
    for (long D = hi; D >= lo; --D)
        if (is_fundamental_discriminant(D)) ds.push_back(D);
    long const n = static_cast<long>(ds.size());
    std::vector<class_number_row> out(n);
    auto one = [&](long i) {
        long const D = ds[i];
        long const d = ((D % 4) + 4) % 4 == 1 ? D : D / 4;
        class_group G = compute_class_group(field_spec::imaginary_quadratic(d));
        out[i] = {D, G.order(), G.structure};
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) one(i);
    } else {
        for (long i = 0; i < n; ++i) one(i);
    }
    return out;
}

} // namespace weier
