#pragma once

#include <json.hpp>

#include "rankbrittle/colorful_cut.hpp"
#include "rankbrittle/decomposition.hpp"
#include "rankbrittle/vertex_minor.hpp"

namespace rankbrittle {

using json = nlohmann::ordered_json;

json json_of(VertexSet s);
/// [{"op": "lc" | "del", "v": label}, ...]
json json_of(const VMWitness& w);
/// Leaf = integer, internal node = array of children.
json json_of(const DecompositionNode& node);
json json_of(const Decomposition& d);
json json_of(const Partition& p);
/// {"order": [...], "width": w}
json json_of(const LinearLayout& l);
json json_of(const CutCertificate& c);

/// Parsers throw FormatError (offset 0) on malformed structure.
VMWitness vm_witness_from_json(const json& j);
Decomposition decomposition_from_json(const json& j);
Partition partition_from_json(const json& j);

}  // namespace rankbrittle
