#pragma once

// Tiling JSON, OBJ meshes and JSON reports. Floats are rounded to 12
// significant digits so identical runs give byte-identical files.

#include "icotile/analysis.hpp"
#include "icotile/grassmann.hpp"
#include "icotile/search.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace icotile::io {

using json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double rounded(double x);

json to_json(const GoldenRational& x);
GoldenRational golden_from_json(const json& j);

/// {"slope": "icosahedral"|"custom", "generators": [...] (custom only),
///  "gamma": [3 exact strings] or [6 floats], "radius": R,
///  "tiles": [{"anchor": [6 ints], "triple": [i, j, k]}, ...]}
json patch_to_json(const Patch& p);
/// Throws FormatError with the offending field on malformed input.
Patch patch_from_json(const json& j);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

void write_patch(const std::string& path, const Patch& p);
Patch read_patch(const std::string& path);

/// Eight vertices and six quads per tile, prolate tiles first, then oblate.
std::string patch_to_obj(const Patch& p);

json to_json(const GrassmannExact& g);
json to_json(const SignTable& t);
json to_json(const FullAlternationSolution& s);
json to_json(const WeakSolveReport& r);
json to_json(const PlanarityReport& r);
json to_json(const PatchAlternation& a);
json to_json(const PeriodicityCheck& c);
json to_json(const FlipSite& s);
json to_json(const TraceEntry& e);
json to_json(const EvidenceRow& r);
EvidenceRow evidence_from_json(const json& j);
json to_json(const ConjectureSummary& s);
json to_json(const AuxiliaryVectors& a);

std::string quad_vec_str(const std::array<int, 4>& q);

}  // namespace icotile::io
