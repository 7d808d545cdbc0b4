#pragma once

#include "dcas/elliptic.hpp"
#include "dcas/lattice.hpp"
#include "dcas/ode.hpp"
#include "dcas/series.hpp"
#include "dcas/unipoly.hpp"

#include <json.hpp>

namespace dcas {

using json = nlohmann::json;

json to_json(const Rat& r);
json to_json(const UniPoly& p);  // ["c0", "c1", ...]
json to_json(const UniRat& r);   // {"var", "expr", "num", "den"}
json to_json(const PowerSeries& s);
json to_json(const DiffOp& op);
json to_json(const GenusReport& g);

PowerSeries series_from_json(const json& j);
DiffOp diffop_from_json(const json& j);
// A coefficient list (ints or "p/q" strings) or a polynomial expression.
UniPoly unipoly_from_json(const json& j, const std::string& var);

}  // namespace dcas
