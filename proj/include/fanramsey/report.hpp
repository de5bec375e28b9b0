#pragma once

#include "json.hpp"

#include "fanramsey/bigraphic.hpp"
#include "fanramsey/constructions.hpp"
#include "fanramsey/fans.hpp"
#include "fanramsey/matching.hpp"
#include "fanramsey/ramsey.hpp"

// JSON views of the library's result types, shared by the CLI and bindings.
namespace fanramsey {

nlohmann::json to_json(const Matching& m);
nlohmann::json to_json(const EGPartition& eg);
nlohmann::json to_json(const FanWitness& w);
nlohmann::json to_json(const MonoFan& f);
nlohmann::json to_json(const BigraphicCertificate& c);
nlohmann::json to_json(const BipartiteRealization& r);
nlohmann::json to_json(const IntervalRealization& r);
nlohmann::json to_json(const ConstructionParams& p);
nlohmann::json to_json(const FormulaResult& f);
nlohmann::json to_json(const FanRamseyBounds& b);
nlohmann::json to_json(const DiracThreshold& t);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const NeighborhoodStructure& s);

}  // namespace fanramsey
