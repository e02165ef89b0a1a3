#ifndef WEIER_BATCH_HPP
#define WEIER_BATCH_HPP

#include "weier/corpus.hpp"
#include "weier/error.hpp"

namespace weier {

struct corpus_result
{
    std::string name;
    /* set when assemble succeeded */
    std::optional<model_report> report;
    /* the assemble error, or the synthesis obstruction when the report exists */
    std::optional<errc> failure;
    std::string message;
};

/* assemble every entry (pointed entries as pointed) and synthesize where
 * the criterion allows; results in input order */
std::vector<corpus_result> analyze_corpus(std::vector<corpus_entry> const & entries, bool parallel,
                                          long mobius_budget = default_mobius_budget,
                                          long node_cap = default_node_cap());

bool is_fundamental_discriminant(long D);

struct class_number_row
{
    long D;
    long h;
    std::vector<long> structure;
};

/* class groups of all fundamental discriminants D with lo <= D <= hi < 0 */
std::vector<class_number_row> class_number_table(long lo, long hi, bool parallel);

} // namespace weier

#endif /* WEIER_BATCH_HPP */
