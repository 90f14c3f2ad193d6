#pragma once

/* JSON (de)serialization for the public value types, plus the TSV row format
 * for outcome lists.  ordered_json keeps emitted field order stable, so
 * output is byte-deterministic for identical inputs.  Integers are emitted
 * as JSON numbers and must fit in 64 bits (std::range_error otherwise);
 * parsing accepts either an integer or a decimal string.  Optional record
 * fields serialize as null and may be null or absent on input. */

#include "adjsurf/adjoint.hpp"
#include "adjsurf/classify.hpp"
#include "adjsurf/connectedness.hpp"
#include "adjsurf/examples.hpp"
#include "adjsurf/lattice.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace adjsurf {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

Json to_json(const SurfaceModel& model);
SurfaceModel surface_model_from_json(const Json& j);

Json to_json(const DivisorClass& divisor);
DivisorClass divisor_class_from_json(const Json& j);

Json to_json(const ConfiguredDivisor& divisor);
ConfiguredDivisor configured_divisor_from_json(const Json& j);

Json to_json(const InvariantRecord& rec);
InvariantRecord invariant_record_from_json(const Json& j);

Json to_json(const Witness& witness);
Witness witness_from_json(const Json& j);

Json to_json(const ClassificationOutcome& outcome);
Json to_json(const ClassificationResult& result);

Json to_json(const QdReport& report);
Json to_json(const ConstraintCheck& check);
Json to_json(const FeasibilityVerdict& verdict);
Json to_json(const FirstAdjointReport& report);
Json to_json(const AdjointProfile& profile);
Json to_json(const DecompositionReport& report);
Json to_json(const UnitSplitReport& report);
Json to_json(const ZeroSquareVerdict& verdict);
Json to_json(const WitnessVerdict& verdict);
Json to_json(const ExampleCheck& check);
Json to_json(const ExampleReport& report);

/* One outcome per row: case, params (k=v comma-joined, "-" when empty), d, g,
 * verified.  Starts with a header row; rows end in '\n'. */
std::string outcomes_tsv(const std::vector<ClassificationOutcome>& outcomes);

}  // namespace adjsurf
