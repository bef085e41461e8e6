#ifndef BAXTER_SERIALIZE_HPP
#define BAXTER_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "baxter/complete.hpp"
#include "baxter/ideals.hpp"
#include "baxter/shuffle.hpp"

namespace baxter {

using Json = nlohmann::ordered_json;

/// {"ring", "vars", "weight", "terms": [{"coeff", "word": [[exps over vars], ...]}]},
/// terms in ascending canonical order.
Json element_to_json(const ShuffleElement& e);
/// Rebuilds the algebra from the document's ring, vars and weight.
ShuffleElement element_from_json(const Json& j);
/// Reads the terms into an existing algebra; ring, vars and weight must match.
ShuffleElement element_from_json(const CtxPtr& ctx, const Json& j);

/// {"ring", "weight", "precision", "coeffs"}.
Json series_to_json(const TruncatedBaxterSeries& s);
TruncatedBaxterSeries series_from_json(const Json& j);

/// {"ring", "length", "comps"}.
Json sequence_to_json(const SequenceElement& s);
SequenceElement sequence_from_json(const Json& j);

Json membership_to_json(const MembershipCertificate& cert, const std::vector<ShuffleElement>& generators);
Json trace_to_json(const ReductionTrace& trace);

}  // namespace baxter

#endif
