#pragma once

// Deterministic JSON renderings of the report types. Keys keep insertion
// order; big integers and field elements are strings.

#include <nlohmann/json.hpp>

#include "belyi/bounds.hpp"
#include "belyi/dessins.hpp"
#include "belyi/hat_check.hpp"
#include "belyi/heights.hpp"
#include "belyi/pipeline.hpp"

namespace belyi {

using Json = nlohmann::ordered_json;

/// A number when it fits in 64 bits, else a decimal string.
Json integer_json(const Integer& x);

Json to_json(const QuadraticDessin& d, const DessinVerification& v);
Json to_json(const BoundsReport& r);
Json to_json(const Delta2Row& r);
Json to_json(const Delta2Report& r);  // summary only
Json to_json(const PointSet& s);
Json to_json(const ChainStage& s);
Json to_json(const CompositionChain& c);
Json to_json(const PipelineResult& r);
Json to_json(const ChainCheck& c);
Json to_json(const InequalityRecord& r);
Json to_json(const HeightReport& r);
Json to_json(const RoyThunderReport& r);
Json to_json(const HatCheckRecord& r);
Json to_json(const HatCheckReport& r);
Json to_json(const PermutationTriple& t);
Json to_json(const DessinClass& c, const CombinatoricsLimits& lim = {});

}  // namespace belyi
