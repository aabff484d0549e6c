#pragma once

#include <json.hpp>

#include "latkit/curvegraph.hpp"
#include "latkit/glue.hpp"

namespace latkit {

using Json = nlohmann::ordered_json;

// {"rank": n, "gram": [[...]], "labels": [...]}
IntegerLattice lattice_from_json(const Json& j, bool allow_degenerate = false);
Json lattice_to_json(const IntegerLattice& l);

// {"vectors": [[...], ...]} -- integer coordinate rows in the ambient basis
ZMat vectors_from_json(const Json& j);
Json vectors_to_json(const ZMat& m);

// {"vertices": [{"label": .., "self": -2, "bold": false}, ...],
//  "edges": [["R1","R2",1], ...]}
CurveGraph graph_from_json(const Json& j);
Json graph_to_json(const CurveGraph& g);

Json qvec_to_json(const QVec& v);  // exact fraction strings

Json load_json_file(const std::string& path);

}  // namespace latkit
