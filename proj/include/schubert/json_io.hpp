#ifndef SCHUBERT_JSON_IO_HPP
#define SCHUBERT_JSON_IO_HPP

#include "schubert/diagram.hpp"
#include "schubert/hilbert.hpp"
#include "schubert/ideal.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/verify.hpp"

#include <json.hpp>

namespace schubert {

/// All JSON uses insertion-ordered objects; big integers are decimal
/// strings, rationals are reduced "numerator/denominator" strings with a
/// positive denominator, and every collection follows the library's
/// canonical ordering, so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);

Json to_json(const Box& b);
Json to_json(const BoxSet& s);

Json to_json(const RankMatrix& r);

Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

Json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

Json to_json(const RatUniPoly& p);
RatUniPoly ratunipoly_from_json(const Json& j);

Json to_json(const AmbientSpec& a);

Json to_json(const MinorSpec& m);
Json to_json(const GeneratorSet& g);

Json to_json(const HilbertReport& report); // includes schema_version

Json to_json(const VerificationOutcome& outcome); // includes schema_version

Json to_json(const CrossCheckResult& result);

} // namespace schubert

#endif
