#pragma once

#include <json.hpp>
#include <string>

#include "whirl/certificates.hpp"
#include "whirl/parking.hpp"
#include "whirl/statistics.hpp"
#include "whirl/sweep.hpp"
#include "whirl/toggles.hpp"

namespace whirl {

// All structured output is deterministic: ordered JSON, stable row order,
// byte-identical across runs.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);  // {num, den}
Json to_json(const FamilyCensus& census);
Json to_json(const OrbitBoard& board);
Json to_json(const std::vector<Orbit>& partition);
Json to_json(const HomomesyReport& report);
Json to_json(const ChunkPartition& cert);
Json to_json(const RedLightCycles& cert);
Json to_json(const SnakeDecomposition& cert);
Json to_json(const SweepReport& report);
Json to_json(const ToggleReport& report);
Json to_json(const TranspositionFactorization& fac);
Json to_json(const LabeledTree& tree);

// Text renderings.  Boards mirror the figures: one word per line.
std::string board_text(const OrbitBoard& board);
std::string census_text(const FamilyCensus& census);
std::string partition_text(const std::vector<Orbit>& partition,
                           const FamilySpec& family, const WhirlOrder& order);
std::string homomesy_text(const HomomesyReport& report);
std::string chunk_text(const ChunkPartition& cert);
std::string red_light_text(const RedLightCycles& cert);
std::string snake_text(const SnakeDecomposition& cert);
std::string sweep_text(const SweepReport& report);
std::string toggle_text(const ToggleReport& report);
std::string tree_text(const LabeledTree& tree);

// CSV: one row per orbit.
std::string homomesy_csv(const HomomesyReport& report);
std::string partition_csv(const std::vector<Orbit>& partition);
std::string census_csv(const FamilyCensus& census);
std::string toggle_csv(const ToggleReport& report);

}  // namespace whirl
