#include "spinal/network_io.hpp"

#include "spinal/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace spinal {

using nlohmann::json;

namespace {

int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

template <class T>
T field(const json& obj, const char* key, std::string_view where) {
  if (!obj.contains(key)) throw ParseError(0, std::string(where) + ": missing \"" + key + "\"");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(0, std::string(where) + ": \"" + key + "\" has the wrong type");
  }
}

} // namespace

PhyloNetwork parse_network_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_of(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError(1, "expected a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw ParseError(0, "missing \"vertices\" array");
  if (!doc.contains("arcs") || !doc["arcs"].is_array()) throw ParseError(0, "missing \"arcs\" array");

  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const json& v = doc["vertices"][i];
    const auto where = "vertices[" + std::to_string(i) + "]";
    if (!v.is_object()) throw ParseError(0, where + ": expected an object");
    const auto kind_text = field<std::string>(v, "kind", where);
    const auto kind = parse_vertex_kind(kind_text);
    if (!kind) throw ParseError(0, where + ": unknown kind \"" + kind_text + "\"");
    Vertex vertex{field<int>(v, "id", where), *kind, std::nullopt};
    if (v.contains("label") && !v["label"].is_null()) vertex.label = field<int>(v, "label", where);
    vertices.push_back(vertex);
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < doc["arcs"].size(); ++i) {
    const json& a = doc["arcs"][i];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
      throw ParseError(0, "arcs[" + std::to_string(i) + "]: expected [tail, head]");
    }
    arcs.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  PhyloNetwork net(std::move(vertices), std::move(arcs));

  if (doc.contains("n") && field<int>(doc, "n", "network") != net.leaf_count()) {
    throw ParseError(0, "\"n\" does not match the number of leaves");
  }
  if (doc.contains("k") && field<int>(doc, "k", "network") != net.reticulation_count()) {
    throw ParseError(0, "\"k\" does not match the number of reticulations");
  }
  if (doc.contains("labeled") && field<bool>(doc, "labeled", "network") != net.labeled()) {
    throw ParseError(0, "\"labeled\" does not match the vertex labels");
  }
  return net;
}

std::string format_network_json(const PhyloNetwork& net, bool pretty) {
  json doc;
  doc["n"] = net.leaf_count();
  doc["k"] = net.reticulation_count();
  doc["labeled"] = net.labeled();
  json vertices = json::array();
  for (const Vertex& v : net.vertices()) {
    json o;
    o["id"] = v.id;
    o["kind"] = std::string(to_string(v.kind));
    if (v.label) o["label"] = *v.label;
    vertices.push_back(std::move(o));
  }
  doc["vertices"] = std::move(vertices);
  json arcs = json::array();
  for (const Arc& a : net.arcs()) arcs.push_back({a.tail, a.head});
  doc["arcs"] = std::move(arcs);
  return doc.dump(pretty ? 2 : -1);
}

std::string format_network_dot(const PhyloNetwork& net) {
  std::string out = "digraph network {\n";
  for (const Vertex& v : net.vertices()) {
    out += "  v" + std::to_string(v.id) + " [shape=";
    out += v.kind == VertexKind::reticulation ? "box" : "circle";
    out += ", label=\"";
    if (v.label) out += std::to_string(*v.label);
    out += "\"];\n";
  }
  for (const Arc& a : net.arcs()) {
    out += "  v" + std::to_string(a.tail) + " -> v" + std::to_string(a.head) + ";\n";
  }
  out += "}\n";
  return out;
}

} // namespace spinal
