#pragma once

#include <string>

#include "json.hpp"

#include "core/f1elem.hpp"
#include "core/monoid.hpp"
#include "core/normed_set.hpp"
#include "core/puiseux.hpp"
#include "core/scalar.hpp"
#include "core/witt.hpp"

namespace f1an {

using Json = nlohmann::ordered_json;

// Digit count assumed for p-adic payloads that omit "N" (default 32).
unsigned default_padic_precision();
void set_default_padic_precision(unsigned N);

Json rat_to_json(const Rat& q);          // {"num":..,"den":..}
Rat rat_from_json(const Json& j);        // accepts int, "a/b" string, or object form

// Norm values print exactly when possible, else 12 significant digits; the
// log2 field always rides along.
Json norm_to_json(const NormValue& v);

Json set_to_json(const FiniteNormedSet& s);
FiniteNormedSet set_from_json(const Json& j);

Json monoid_to_json(const GeometricMonoid& m);
GeometricMonoid monoid_from_json(const Json& j);

Json scalar_to_json(const GroundScalar& x);
GroundScalar scalar_from_json(const Json& j);

Json f1elem_to_json(const F1Element& e);
F1Element f1elem_from_json(const Json& j);

Json puiseux_to_json(const PuiseuxPoly& f);
PuiseuxPoly puiseux_from_json(const Json& j);

Json witt_to_json(const WittVector& w);
WittVector witt_from_json(const Json& j);

Json ff_to_json(const FFElement& x);
FFElement ff_from_json(const Json& j);

Json parse_json(const std::string& text);  // ParseError on bad input

}  // namespace f1an
