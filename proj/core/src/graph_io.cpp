// Copyright 2026 The qgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgraph/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qgraph/errors.hpp"

namespace qgraph {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kParse, "graph schema: " + what);
}

std::string require_string(const json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) schema_error(ctx + " needs string field '" + key + "'");
  return it->get<std::string>();
}

std::complex<double> parse_entry(const json& entry) {
  if (entry.is_number()) return {entry.get<double>(), 0.0};
  if (entry.is_object()) {
    double re = 0, im = 0;
    if (auto it = entry.find("re"); it != entry.end()) {
      if (!it->is_number()) schema_error("unitary entry 're' must be a number");
      re = it->get<double>();
    }
    if (auto it = entry.find("im"); it != entry.end()) {
      if (!it->is_number()) schema_error("unitary entry 'im' must be a number");
      im = it->get<double>();
    }
    return {re, im};
  }
  schema_error("unitary entry must be a number or {re, im}");
}

CouplingSpec parse_coupling(const json& value, const std::string& vertex_id) {
  if (value.is_string()) {
    const auto name = value.get<std::string>();
    if (name == "standard") return StandardCoupling{};
    if (name == "dirichlet") return DirichletCoupling{};
    schema_error("vertex " + vertex_id + ": unknown coupling '" + name + "'");
  }
  if (value.is_object() && value.contains("unitary")) {
    const json& rows = value.at("unitary");
    if (!rows.is_array()) schema_error("vertex " + vertex_id + ": unitary must be an array of rows");
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd u(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
        schema_error("vertex " + vertex_id + ": unitary must be square");
      for (Eigen::Index c = 0; c < n; ++c) u(r, c) = parse_entry(row[static_cast<std::size_t>(c)]);
    }
    return GeneralCoupling{std::move(u)};
  }
  schema_error("vertex " + vertex_id + ": coupling must be \"standard\", \"dirichlet\" or {\"unitary\": ...}");
}

}  // namespace

MetricGraph parse_graph(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) schema_error("missing 'vertices' array");
  if (doc.contains("edges") && !doc["edges"].is_array()) schema_error("'edges' must be an array");

  std::vector<VertexSpec> vertices;
  for (const json& v : doc["vertices"]) {
    if (!v.is_object()) schema_error("vertex entries must be objects");
    VertexSpec spec;
    spec.id = require_string(v, "id", "vertex");
    if (auto it = v.find("leads"); it != v.end()) {
      if (!it->is_number_integer()) schema_error("vertex " + spec.id + ": 'leads' must be an integer");
      spec.leads = it->get<int>();
    }
    if (auto it = v.find("coupling"); it != v.end()) spec.coupling = parse_coupling(*it, spec.id);
    vertices.push_back(std::move(spec));
  }

  std::vector<InternalEdge> edges;
  if (doc.contains("edges")) {
    for (const json& e : doc["edges"]) {
      if (!e.is_object()) schema_error("edge entries must be objects");
      InternalEdge edge;
      edge.id = require_string(e, "id", "edge");
      edge.from = require_string(e, "from", "edge " + edge.id);
      edge.to = require_string(e, "to", "edge " + edge.id);
      auto it = e.find("length");
      if (it == e.end()) schema_error("edge " + edge.id + " needs 'length'");
      if (it->is_string()) {
        edge.length = parse_rational(it->get<std::string>());
      } else if (it->is_number_integer()) {
        edge.length = Rational(it->get<long>());
      } else {
        schema_error("edge " + edge.id + ": 'length' must be a decimal string");
      }
      edges.push_back(std::move(edge));
    }
  }
  return MetricGraph(std::move(vertices), std::move(edges));
}

MetricGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string dump_graph(const MetricGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : g.vertices()) {
    json jv{{"id", v.id}, {"leads", v.leads}};
    if (is_standard(v.coupling)) {
      jv["coupling"] = "standard";
    } else if (is_dirichlet(v.coupling)) {
      jv["coupling"] = "dirichlet";
    } else {
      const auto& u = std::get<GeneralCoupling>(v.coupling).unitary;
      json rows = json::array();
      for (Eigen::Index r = 0; r < u.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < u.cols(); ++c)
          row.push_back({{"re", u(r, c).real()}, {"im", u(r, c).imag()}});
        rows.push_back(row);
      }
      jv["coupling"] = {{"unitary", rows}};
    }
    doc["vertices"].push_back(jv);
  }
  doc["edges"] = json::array();
  for (const auto& e : g.edges())
    doc["edges"].push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}, {"length", to_string(e.length)}});
  return doc.dump(2);
}

}  // namespace qgraph
