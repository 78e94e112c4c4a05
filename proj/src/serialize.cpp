#include "rankbrittle/serialize.hpp"

#include "rankbrittle/errors.hpp"

namespace rankbrittle {

json json_of(VertexSet s) { return s.to_vector(); }

json json_of(const VMWitness& w) {
  json out = json::array();
  for (const auto& s : w.steps) {
    out.push_back({{"op", s.op == VMStep::Op::LocalComplement ? "lc" : "del"}, {"v", s.vertex}});
  }
  return out;
}

json json_of(const DecompositionNode& node) {
  if (node.is_leaf()) return node.vertex;
  json out = json::array();
  for (const auto& c : node.children) out.push_back(json_of(c));
  return out;
}

json json_of(const Decomposition& d) { return json_of(d.root); }

json json_of(const Partition& p) {
  json out = json::array();
  for (auto part : p.parts) out.push_back(json_of(part));
  return out;
}

json json_of(const LinearLayout& l) { return {{"order", l.order}, {"width", l.width}}; }

json json_of(const CutCertificate& c) {
  json out;
  if (c.kind == CutCertificate::Kind::ComponentInPart) {
    out["kind"] = "component_in_part";
    out["child"] = c.child;
  } else {
    out["kind"] = "colorful_union";
    out["colors"] = c.colors;
  }
  out["set"] = json_of(c.set);
  out["rank"] = c.rank;
  return out;
}

VMWitness vm_witness_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("witness must be a JSON array", 0);
  VMWitness w;
  for (const auto& step : j) {
    if (!step.is_object() || !step.contains("op") || !step.contains("v") || !step["v"].is_number_integer()) {
      throw FormatError("witness step must be {\"op\": ..., \"v\": int}", 0);
    }
    const auto op = step["op"].get<std::string>();
    if (op == "lc") {
      w.steps.push_back(VMStep::lc(step["v"].get<int>()));
    } else if (op == "del") {
      w.steps.push_back(VMStep::del(step["v"].get<int>()));
    } else {
      throw FormatError("unknown witness op '" + op + "'", 0);
    }
  }
  return w;
}

namespace {

DecompositionNode node_from_json(const json& j) {
  if (j.is_number_integer()) return DecompositionNode::leaf(j.get<int>());
  if (!j.is_array()) throw FormatError("decomposition node must be an integer or an array", 0);
  DecompositionNode node;
  for (const auto& c : j) node.children.push_back(node_from_json(c));
  return node;
}

}  // namespace

Decomposition decomposition_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("decomposition root must be an array", 0);
  return Decomposition{node_from_json(j)};
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("partition must be an array of arrays", 0);
  Partition p;
  for (const auto& part : j) {
    if (!part.is_array()) throw FormatError("partition part must be an array", 0);
    VertexSet s;
    for (const auto& v : part) {
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= kMaxVertices) {
        throw FormatError("partition entries must be vertex indices", 0);
      }
      s.insert(v.get<int>());
    }
    p.parts.push_back(s);
  }
  return p;
}

}  // namespace rankbrittle
