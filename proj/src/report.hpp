#pragma once

#include <json.hpp>

#include "colouring.hpp"
#include "norms.hpp"
#include "quadsys.hpp"
#include "ramsey.hpp"
#include "solution_count.hpp"

namespace fpreg {

using nlohmann::json;

json to_json(cplx z);
json to_json(const NormReport& r);
json to_json(const TValue& t);
json to_json(const TBoundsReport& r);
json to_json(const CensusReport& r);
json to_json(const CounterexampleReport& r, bool include_members = false);
json to_json(const ScanSummary& s);
json to_json(const RegularityDecomposition& d);
json to_json(const GapReport& g);
json to_json(const Majorant& m);
json to_json(const RamseyConstants& c);
json to_json(const RamseySearchResult& r);
json to_json(const DenseFiber& f);
json to_json(const SchurReport& r);
json to_json(const Case3Result& r);

}  // namespace fpreg
