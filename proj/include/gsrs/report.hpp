#pragma once

// JSON forms of the library's results. Rationals are canonical "p/q"
// strings, points are [re, im] pairs; keys come out sorted, so equal inputs
// give byte-identical text.

#include "gsrs/dynamics.hpp"
#include "gsrs/families.hpp"
#include "gsrs/geometry.hpp"
#include "gsrs/region.hpp"
#include "gsrs/verify.hpp"

#include <json.hpp>

namespace gsrs {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const QComplex& z);
Json to_json(const GaussianInt& g);
Json to_json(const Cycle& c);
Json to_json(const HalfPlane& h);
Json to_json(const Cell& c);
Json to_json(const FamilyInstance& inst);
Json to_json(const Bracket& b, int digits = 20);
Json to_json(const CoverageReport& r);
Json to_json(const TileReport& r);

std::string to_string(DiskRelation r);

}  // namespace gsrs
