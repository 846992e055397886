#pragma once

#include <string>

#include <json.hpp>

#include "bh/coloring.hpp"
#include "bh/cover.hpp"
#include "bh/graphcover.hpp"
#include "bh/lifting.hpp"
#include "bh/orbit.hpp"

namespace bh {

using json = nlohmann::json;

json cover_to_json(const MonodromyCover& cover);
MonodromyCover cover_from_json(const json& j);

json graph_to_json(const CoverGraph& g);
CoverGraph graph_from_json(const json& j);

// {"format":1, "automorphisms":[{"label":..., "sub":{"c1":"c1 c2 C1", ...}}]}
// Unlisted generators are fixed. Every automorphism must preserve the
// relator.
std::vector<Automorphism> automorphisms_from_json(const json& j, const Signature& sig);

json fiber_to_json(const FiberData& fd);
json multicurve_to_json(const LiftedMulticurve& mc);
json region_graph_to_json(const RegionGraph& rg);
json gamma_to_json(const GammaGraph& g);
json orbit_to_json(const OrbitTable& table);
json wcl_to_json(const WclResult& r);
json verdict_to_json(const Verdict& v);

// JSON text with objects and nested structures indented but arrays of
// primitives kept on one line, so permutations read as [1,0,2].
std::string pretty(const json& j);

std::string fnv1a_digest(const std::string& bytes);

json load_json_file(const std::string& path);
MonodromyCover load_cover_file(const std::string& path);

} // namespace bh
