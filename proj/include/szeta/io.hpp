#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "szeta/cyclofactor.hpp"
#include "szeta/limitset.hpp"
#include "szeta/places.hpp"
#include "szeta/system.hpp"
#include "szeta/zeta.hpp"

namespace szeta::io {

// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Exact rational from "a/b", an integer, or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& r);

Json to_json(const Rational& r);  // {"num":..,"den":..}
Rational rational_from_json(const Json& j);

Json to_json(const Poly& f);  // coefficients low to high
Poly poly_from_json(PrimeField field, const Json& j);

Json to_json(const Place& place);
Json to_json(const IndexedPlace& place);
Place place_from_json(PrimeField field, const Json& j);

Json to_json(const CycloFactorization& fac);
CycloFactorization cyclo_from_json(PrimeField field, const Json& j);

Json to_json(const SystemSpec& spec);
SystemSpec spec_from_json(const Json& j);

Json to_json(const ZetaSeries& series);
ZetaSeries series_from_json(const Json& j);

Json to_json(const GrowthPoint& g);
Json to_json(const ConstructionReport& report);

// Header "n,e,rate_num,rate_den", one row per point, trailing newline.
std::string growth_to_csv(const std::vector<GrowthPoint>& points);

}  // namespace szeta::io
