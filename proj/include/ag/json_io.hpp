#pragma once

// Stable JSON shapes for every report the CLI emits. Keys are sorted (the
// default object ordering) and nothing time-dependent is included unless
// explicitly requested, so identical inputs produce byte-identical output.

#include "json.hpp"

#include "ag/classify.hpp"
#include "ag/harness.hpp"
#include "ag/magma.hpp"
#include "ag/rewrite.hpp"

namespace ag {

nlohmann::json to_json(const Magma& m);
nlohmann::json to_json(const StructureReport& r);

/// {"classes": {kind: {"global", "witnesses": {element: [params]},
///  "first_failing"?}}}
nlohmann::json to_json(const ClassReport& r);

nlohmann::json to_json(const PropertyResult& r, bool include_elapsed = false);
nlohmann::json to_json(const HarnessReport& r, bool include_elapsed = false);
nlohmann::json to_json(const ReplayReport& r);

}  // namespace ag
