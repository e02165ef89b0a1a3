#ifndef WEIER_IO_HPP
#define WEIER_IO_HPP

#include "weier/globalmodel.hpp"

#include "json.hpp"

namespace weier {

using json = nlohmann::ordered_json;

constexpr int schema_version = 1;

/* "Q" or "Q(sqrt(d))" on output; also accepts a bare integer d or {"d": d} */
json field_to_json(field_spec f);
field_spec field_from_json(json const & j);

/* "num/den" strings; elements outside Q as ["a", "b"] meaning a + b w */
json elem_to_json(kelem const & x, field_spec f);
kelem elem_from_json(json const & j, field_spec f);

json poly_to_json(poly const & p, field_spec f);
poly poly_from_json(json const & j, field_spec f);

/* {"schema", "field", "genus", "P", "Q", "pointed"} plus optional "models" */
json curve_to_json(weierstrass_eq const & E);
weierstrass_eq curve_from_json(json const & j);
/* the optional "models" array of a curve: {"p", "index", "a", "r", "b", "h"} */
std::vector<local_override> overrides_from_json(json const & j);
json override_to_json(local_override const & o);

json ideal_to_json(frac_ideal const & I);
json prime_to_json(prime_ideal const & P);
json qform_to_json(qform const & f);
json class_group_to_json(class_group const & G);
json local_model_to_json(local_model const & m);
json verdicts_to_json(verdicts const & v);
json report_to_json(model_report const & R);

} // namespace weier

#endif /* WEIER_IO_HPP */
