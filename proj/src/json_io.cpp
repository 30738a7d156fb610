// Copyright 2026 zxfd contributors
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

#include "zxfd/json_io.hpp"

#include <algorithm>

namespace zxfd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json complex_vec_to_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(complex_to_json(c));
  return out;
}

const json& require(const json& j, const std::string& field) {
  if (!j.contains(field)) throw SchemaError("missing field '" + field + "'");
  return j.at(field);
}

int require_int(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_number_integer()) throw SchemaError("field '" + field + "' must be an integer");
  return v.get<int>();
}

std::vector<int> require_int_vec(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_array()) throw SchemaError("field '" + field + "' must be an array");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw SchemaError("field '" + field + "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<Complex> require_complex_vec(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_array()) throw SchemaError("field '" + field + "' must be an array");
  std::vector<Complex> out;
  for (const auto& e : v) out.push_back(complex_from_json(e, field));
  return out;
}

}  // namespace

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("field '" + field + "' must hold complex numbers as [re, im]");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

json node_kind_to_json(const NodeKind& k) {
  return std::visit(
      overloaded{
          [](const ZSpider& s) {
            return json{{"in_dims", s.in_dims},
                        {"out_dims", s.out_dims},
                        {"phase", complex_vec_to_json(s.phase.entries())}};
          },
          [](const XSpider& s) {
            return json{{"dim", s.dim}, {"n_in", s.n_in}, {"n_out", s.n_out}};
          },
          [](const Embedding& e) {
            return json{{"dim_in", e.dim_in}, {"dim_out", e.dim_out}};
          },
          [](const BasisKet& b) { return json{{"index", b.index}, {"dim", b.dim}}; },
          [](const Identity& i) { return json{{"dim", i.dim}}; },
          [](const Swap& s) { return json{{"dim_a", s.dim_a}, {"dim_b", s.dim_b}}; },
          [](const Cap& c) { return json{{"dim", c.dim}}; },
          [](const Cup& c) { return json{{"dim", c.dim}}; },
          [](const GlobalScalar& g) { return json{{"value", complex_to_json(g.value)}}; },
          [](const ZwSpider& s) {
            return json{{"r", complex_to_json(s.r)},
                        {"label", s.label},
                        {"n_in", s.n_in},
                        {"n_out", s.n_out}};
          },
          [](const WNode& w) {
            return json{{"big_label", w.big_label}, {"small_labels", w.small_labels}};
          },
          [](const ZwKet& z) { return json{{"index", z.index}, {"label", z.label}}; },
          [](const ZwScalar& z) { return json{{"value", complex_to_json(z.value)}}; },
          [](const ZwIdentity& i) { return json{{"label", i.label}}; },
          [](const ZwSwap& s) { return json{{"label_a", s.label_a}, {"label_b", s.label_b}}; },
          [](const ZwCap& c) { return json{{"label", c.label}}; },
          [](const ZwCup& c) { return json{{"label", c.label}}; },
      },
      k);
}

NodeKind node_kind_from_json(const std::string& name, const json& p) {
  if (name == "zspider")
    return ZSpider{require_int_vec(p, "in_dims"), require_int_vec(p, "out_dims"),
                   PhaseVector(require_complex_vec(p, "phase"))};
  if (name == "xspider")
    return XSpider{require_int(p, "dim"), require_int(p, "n_in"), require_int(p, "n_out")};
  if (name == "embedding") return Embedding{require_int(p, "dim_in"), require_int(p, "dim_out")};
  if (name == "ket") return BasisKet{require_int(p, "index"), require_int(p, "dim")};
  if (name == "identity") return Identity{require_int(p, "dim")};
  if (name == "swap") return Swap{require_int(p, "dim_a"), require_int(p, "dim_b")};
  if (name == "cap") return Cap{require_int(p, "dim")};
  if (name == "cup") return Cup{require_int(p, "dim")};
  if (name == "scalar") return GlobalScalar{complex_from_json(require(p, "value"), "value")};
  if (name == "zwspider")
    return ZwSpider{complex_from_json(require(p, "r"), "r"), require_int(p, "label"),
                    require_int(p, "n_in"), require_int(p, "n_out")};
  if (name == "wnode")
    return WNode{require_int(p, "big_label"), require_int_vec(p, "small_labels")};
  if (name == "zwket") return ZwKet{require_int(p, "index"), require_int(p, "label")};
  if (name == "zwscalar") return ZwScalar{complex_from_json(require(p, "value"), "value")};
  if (name == "zwidentity") return ZwIdentity{require_int(p, "label")};
  if (name == "zwswap") return ZwSwap{require_int(p, "label_a"), require_int(p, "label_b")};
  if (name == "zwcap") return ZwCap{require_int(p, "label")};
  if (name == "zwcup") return ZwCup{require_int(p, "label")};
  throw SchemaError("unknown node kind '" + name + "'");
}

namespace {

json endpoint_to_json(const Endpoint& ep) {
  switch (ep.type) {
    case Endpoint::Type::Input:
      return json::array({"in", ep.id});
    case Endpoint::Type::Output:
      return json::array({"out", ep.id});
    case Endpoint::Type::Node:
      return json::array({ep.id, ep.port});
  }
  return json::array();
}

Endpoint endpoint_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw SchemaError("endpoint must be a two-element array");
  if (j[0].is_string()) {
    std::string s = j[0].get<std::string>();
    if (!j[1].is_number_integer()) throw SchemaError("boundary endpoint slot must be an integer");
    uint32_t slot = j[1].get<uint32_t>();
    if (s == "in") return Endpoint::input(slot);
    if (s == "out") return Endpoint::output(slot);
    throw SchemaError("boundary endpoint tag must be 'in' or 'out'");
  }
  if (!j[0].is_number_integer() || !j[1].is_number_integer())
    throw SchemaError("node endpoint must be [id, port]");
  return Endpoint::node(j[0].get<uint32_t>(), j[1].get<uint32_t>());
}

}  // namespace

json diagram_to_json(const Diagram& d) {
  json out;
  out["calculus"] = calculus_name(d.calculus());
  json nodes = json::array();
  for (const auto& [id, k] : d.nodes())
    nodes.push_back(json{{"id", id}, {"kind", kind_name(k)}, {"params", node_kind_to_json(k)}});
  out["nodes"] = std::move(nodes);

  std::vector<Wire> wires = d.wires();
  for (auto& w : wires)
    if (w.b < w.a) std::swap(w.a, w.b);
  std::sort(wires.begin(), wires.end(), [](const Wire& x, const Wire& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    if (!(x.b == y.b)) return x.b < y.b;
    return x.dim < y.dim;
  });
  json jw = json::array();
  for (const auto& w : wires)
    jw.push_back(
        json{{"from", endpoint_to_json(w.a)}, {"to", endpoint_to_json(w.b)}, {"dim", w.dim}});
  out["wires"] = std::move(jw);
  out["inputs"] = d.input_dims();
  out["outputs"] = d.output_dims();
  return out;
}

std::string serialize(const Diagram& d) {
  validate(d);
  return diagram_to_json(d).dump(2);
}

Diagram diagram_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("diagram must be a JSON object");
  std::string calc = require(j, "calculus").is_string() ? j.at("calculus").get<std::string>() : "";
  Calculus c;
  if (calc == "zx")
    c = Calculus::ZX;
  else if (calc == "zw")
    c = Calculus::ZW;
  else
    throw SchemaError("field 'calculus' must be \"zx\" or \"zw\"");

  Diagram d(c);
  const json& nodes = require(j, "nodes");
  if (!nodes.is_array()) throw SchemaError("field 'nodes' must be an array");
  for (const auto& n : nodes) {
    uint32_t id = static_cast<uint32_t>(require_int(n, "id"));
    const json& kind = require(n, "kind");
    if (!kind.is_string()) throw SchemaError("field 'kind' must be a string");
    d.add_node_with_id(id, node_kind_from_json(kind.get<std::string>(), require(n, "params")));
  }
  const json& wires = require(j, "wires");
  if (!wires.is_array()) throw SchemaError("field 'wires' must be an array");
  for (const auto& w : wires)
    d.add_wire(endpoint_from_json(require(w, "from")), endpoint_from_json(require(w, "to")),
               require_int(w, "dim"));
  d.set_boundary(require_int_vec(j, "inputs"), require_int_vec(j, "outputs"));
  validate(d);
  return d;
}

Diagram deserialize(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("parse error: ") + e.what());
  }
  return diagram_from_json(j);
}

}  // namespace zxfd
