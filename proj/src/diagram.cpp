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

#include "zxfd/diagram.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>

#include "zxfd/json_io.hpp"

namespace zxfd {

std::string calculus_name(Calculus c) { return c == Calculus::ZX ? "zx" : "zw"; }

PhaseVector::PhaseVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("phase vector must be nonempty");
  if (entries_[0] != Complex{1.0, 0.0})
    throw ValidationError("phase vector entry 0 must be exactly 1");
}

PhaseVector PhaseVector::ones(int length) {
  return PhaseVector(std::vector<Complex>(static_cast<size_t>(length), Complex{1.0, 0.0}));
}

PhaseVector PhaseVector::delta(int length) {
  std::vector<Complex> v(static_cast<size_t>(length), Complex{0.0, 0.0});
  v[0] = Complex{1.0, 0.0};
  return PhaseVector(std::move(v));
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int min_leg_dim(const ZSpider& s) {
  int a = 0;
  for (int d : s.in_dims) a = a == 0 ? d : std::min(a, d);
  for (int d : s.out_dims) a = a == 0 ? d : std::min(a, d);
  return a;
}

}  // namespace

Calculus kind_calculus(const NodeKind& k) {
  return std::visit(
      overloaded{
          [](const ZSpider&) { return Calculus::ZX; },
          [](const XSpider&) { return Calculus::ZX; },
          [](const Embedding&) { return Calculus::ZX; },
          [](const BasisKet&) { return Calculus::ZX; },
          [](const Identity&) { return Calculus::ZX; },
          [](const Swap&) { return Calculus::ZX; },
          [](const Cap&) { return Calculus::ZX; },
          [](const Cup&) { return Calculus::ZX; },
          [](const GlobalScalar&) { return Calculus::ZX; },
          [](const auto&) { return Calculus::ZW; },
      },
      k);
}

std::string kind_name(const NodeKind& k) {
  return std::visit(overloaded{
                        [](const ZSpider&) -> std::string { return "zspider"; },
                        [](const XSpider&) -> std::string { return "xspider"; },
                        [](const Embedding&) -> std::string { return "embedding"; },
                        [](const BasisKet&) -> std::string { return "ket"; },
                        [](const Identity&) -> std::string { return "identity"; },
                        [](const Swap&) -> std::string { return "swap"; },
                        [](const Cap&) -> std::string { return "cap"; },
                        [](const Cup&) -> std::string { return "cup"; },
                        [](const GlobalScalar&) -> std::string { return "scalar"; },
                        [](const ZwSpider&) -> std::string { return "zwspider"; },
                        [](const WNode&) -> std::string { return "wnode"; },
                        [](const ZwKet&) -> std::string { return "zwket"; },
                        [](const ZwScalar&) -> std::string { return "zwscalar"; },
                        [](const ZwIdentity&) -> std::string { return "zwidentity"; },
                        [](const ZwSwap&) -> std::string { return "zwswap"; },
                        [](const ZwCap&) -> std::string { return "zwcap"; },
                        [](const ZwCup&) -> std::string { return "zwcup"; },
                    },
                    k);
}

std::vector<int> kind_in_dims(const NodeKind& k) {
  return std::visit(
      overloaded{
          [](const ZSpider& s) { return s.in_dims; },
          [](const XSpider& s) { return std::vector<int>(static_cast<size_t>(s.n_in), s.dim); },
          [](const Embedding& e) { return std::vector<int>{e.dim_in}; },
          [](const BasisKet&) { return std::vector<int>{}; },
          [](const Identity& i) { return std::vector<int>{i.dim}; },
          [](const Swap& s) { return std::vector<int>{s.dim_a, s.dim_b}; },
          [](const Cap&) { return std::vector<int>{}; },
          [](const Cup& c) { return std::vector<int>{c.dim, c.dim}; },
          [](const GlobalScalar&) { return std::vector<int>{}; },
          [](const ZwSpider& s) {
            return std::vector<int>(static_cast<size_t>(s.n_in), s.label);
          },
          [](const WNode& w) { return std::vector<int>{w.big_label}; },
          [](const ZwKet&) { return std::vector<int>{}; },
          [](const ZwScalar&) { return std::vector<int>{}; },
          [](const ZwIdentity& i) { return std::vector<int>{i.label}; },
          [](const ZwSwap& s) { return std::vector<int>{s.label_a, s.label_b}; },
          [](const ZwCap&) { return std::vector<int>{}; },
          [](const ZwCup& c) { return std::vector<int>{c.label, c.label}; },
      },
      k);
}

std::vector<int> kind_out_dims(const NodeKind& k) {
  return std::visit(
      overloaded{
          [](const ZSpider& s) { return s.out_dims; },
          [](const XSpider& s) { return std::vector<int>(static_cast<size_t>(s.n_out), s.dim); },
          [](const Embedding& e) { return std::vector<int>{e.dim_out}; },
          [](const BasisKet& b) { return std::vector<int>{b.dim}; },
          [](const Identity& i) { return std::vector<int>{i.dim}; },
          [](const Swap& s) { return std::vector<int>{s.dim_b, s.dim_a}; },
          [](const Cap& c) { return std::vector<int>{c.dim, c.dim}; },
          [](const Cup&) { return std::vector<int>{}; },
          [](const GlobalScalar&) { return std::vector<int>{}; },
          [](const ZwSpider& s) {
            return std::vector<int>(static_cast<size_t>(s.n_out), s.label);
          },
          [](const WNode& w) { return w.small_labels; },
          [](const ZwKet& z) { return std::vector<int>{z.label}; },
          [](const ZwScalar&) { return std::vector<int>{}; },
          [](const ZwIdentity& i) { return std::vector<int>{i.label}; },
          [](const ZwSwap& s) { return std::vector<int>{s.label_b, s.label_a}; },
          [](const ZwCap& c) { return std::vector<int>{c.label, c.label}; },
          [](const ZwCup&) { return std::vector<int>{}; },
      },
      k);
}

bool kind_equal(const NodeKind& a, const NodeKind& b) {
  if (a.index() != b.index()) return false;
  return node_kind_to_json(a) == node_kind_to_json(b);
}

void kind_check(const NodeKind& k) {
  auto bad = [](const std::string& msg) { throw ValidationError(msg); };
  std::visit(
      overloaded{
          [&](const ZSpider& s) {
            if (s.in_dims.empty() && s.out_dims.empty()) bad("zspider needs at least one leg");
            for (int d : s.in_dims)
              if (d < 2) bad("zspider leg dimension < 2");
            for (int d : s.out_dims)
              if (d < 2) bad("zspider leg dimension < 2");
            if (s.phase.size() != min_leg_dim(s))
              bad("zspider phase vector length must equal the minimal leg dimension");
          },
          [&](const XSpider& s) {
            if (s.dim < 2) bad("xspider dimension < 2");
            if (s.n_in < 0 || s.n_out < 0) bad("xspider arity negative");
          },
          [&](const Embedding& e) {
            if (e.dim_in < 2 || e.dim_out < 2) bad("embedding dimension < 2");
          },
          [&](const BasisKet& b) {
            if (b.dim < 2) bad("ket dimension < 2");
            if (b.index < 0 || b.index >= b.dim) bad("ket index out of range 0 <= j < a");
          },
          [&](const Identity& i) {
            if (i.dim < 2) bad("identity dimension < 2");
          },
          [&](const Swap& s) {
            if (s.dim_a < 2 || s.dim_b < 2) bad("swap dimension < 2");
          },
          [&](const Cap& c) {
            if (c.dim < 2) bad("cap dimension < 2");
          },
          [&](const Cup& c) {
            if (c.dim < 2) bad("cup dimension < 2");
          },
          [&](const GlobalScalar&) {},
          [&](const ZwSpider& s) {
            if (s.label < 1) bad("zwspider label < 1");
            if (s.n_in < 0 || s.n_out < 0) bad("zwspider arity negative");
          },
          [&](const WNode& w) {
            if (w.big_label < 1) bad("wnode big label < 1");
            for (int b : w.small_labels) {
              if (b < 1) bad("wnode small label < 1");
              if (b > w.big_label) bad("wnode requires big label >= every small label");
            }
          },
          [&](const ZwKet& z) {
            if (z.label < 1) bad("zwket label < 1");
            if (z.index < 0) bad("zwket index negative");
          },
          [&](const ZwScalar&) {},
          [&](const ZwIdentity& i) {
            if (i.label < 1) bad("zwidentity label < 1");
          },
          [&](const ZwSwap& s) {
            if (s.label_a < 1 || s.label_b < 1) bad("zwswap label < 1");
          },
          [&](const ZwCap& c) {
            if (c.label < 1) bad("zwcap label < 1");
          },
          [&](const ZwCup& c) {
            if (c.label < 1) bad("zwcup label < 1");
          },
      },
      k);
}

bool Endpoint::operator<(const Endpoint& o) const {
  if (type != o.type) return static_cast<int>(type) < static_cast<int>(o.type);
  if (id != o.id) return id < o.id;
  return port < o.port;
}

// ---- Construction -------------------------------------------------------

Diagram Diagram::wire(Calculus c, int dim) {
  Diagram d(c);
  d.input_dims_ = {dim};
  d.output_dims_ = {dim};
  d.wires_.push_back({Endpoint::input(0), Endpoint::output(0), dim});
  return d;
}

Diagram Diagram::generator(NodeKind k) {
  kind_check(k);
  Diagram d(kind_calculus(k));
  uint32_t id = d.add_node(k);
  auto ins = kind_in_dims(k);
  auto outs = kind_out_dims(k);
  for (uint32_t i = 0; i < ins.size(); ++i) {
    d.input_dims_.push_back(ins[i]);
    d.wires_.push_back({Endpoint::input(i), Endpoint::node(id, i), ins[i]});
  }
  for (uint32_t o = 0; o < outs.size(); ++o) {
    d.output_dims_.push_back(outs[o]);
    d.wires_.push_back(
        {Endpoint::node(id, static_cast<uint32_t>(ins.size()) + o), Endpoint::output(o), outs[o]});
  }
  return d;
}

Diagram Diagram::route(Calculus c, const std::vector<int>& in_dims, const std::vector<int>& perm) {
  if (in_dims.size() != perm.size()) throw DiagramError("route: permutation size mismatch");
  Diagram d(c);
  d.input_dims_ = in_dims;
  d.output_dims_.resize(in_dims.size());
  for (size_t i = 0; i < perm.size(); ++i)
    d.output_dims_[static_cast<size_t>(perm[i])] = in_dims[i];
  for (uint32_t i = 0; i < perm.size(); ++i)
    d.wires_.push_back({Endpoint::input(i), Endpoint::output(static_cast<uint32_t>(perm[i])),
                        in_dims[i]});
  return d;
}

uint32_t Diagram::add_node(NodeKind k) {
  uint32_t id = next_id_++;
  nodes_.emplace(id, std::move(k));
  return id;
}

void Diagram::add_node_with_id(uint32_t id, NodeKind k) {
  if (nodes_.count(id)) throw DiagramError("duplicate node id " + std::to_string(id));
  nodes_.emplace(id, std::move(k));
  next_id_ = std::max(next_id_, id + 1);
}

void Diagram::add_wire(Endpoint a, Endpoint b, int dim) { wires_.push_back({a, b, dim}); }

void Diagram::set_boundary(std::vector<int> in_dims, std::vector<int> out_dims) {
  input_dims_ = std::move(in_dims);
  output_dims_ = std::move(out_dims);
}

// ---- Composition --------------------------------------------------------

namespace {

// Endpoint or a fusion junction created by sequential composition.
struct JEnd {
  bool junction = false;
  uint32_t junction_id = 0;
  Endpoint real;
};

struct JEdge {
  JEnd a, b;
  int dim;
};

// Eliminate junctions (each incident to exactly two edge ends). Chains become
// single wires; junction-only cycles become closed loops reported by dim.
void resolve_junctions(const std::vector<JEdge>& edges, uint32_t n_junctions,
                       std::vector<Wire>& wires_out, std::vector<int>& loops_out) {
  std::vector<std::vector<std::pair<size_t, int>>> incident(n_junctions);  // (edge, side)
  for (size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].a.junction) incident[edges[e].a.junction_id].push_back({e, 0});
    if (edges[e].b.junction) incident[edges[e].b.junction_id].push_back({e, 1});
  }
  for (uint32_t j = 0; j < n_junctions; ++j)
    if (incident[j].size() != 2)
      throw CompositionError("internal: junction " + std::to_string(j) + " has " +
                             std::to_string(incident[j].size()) + " ends");

  std::vector<bool> edge_done(edges.size(), false);
  auto other_end = [&](size_t e, int side) -> const JEnd& {
    return side == 0 ? edges[e].b : edges[e].a;
  };

  // Walk chains that start at a real endpoint.
  for (size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (edge_done[e0]) continue;
    for (int s0 = 0; s0 < 2; ++s0) {
      const JEnd& start = s0 == 0 ? edges[e0].a : edges[e0].b;
      if (start.junction || edge_done[e0]) continue;
      size_t e = e0;
      int side = s0;  // side holding the real start
      while (true) {
        edge_done[e] = true;
        const JEnd& nxt = other_end(e, side);
        if (!nxt.junction) {
          wires_out.push_back({start.real, nxt.real, edges[e].dim});
          break;
        }
        // hop through the junction to its other incident edge end
        auto& inc = incident[nxt.junction_id];
        auto [e1, s1] = inc[0];
        if (e1 == e && s1 == (side == 0 ? 1 : 0)) std::tie(e1, s1) = inc[1];
        e = e1;
        side = s1;
      }
    }
  }
  // Remaining edges form junction-only cycles.
  for (size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (edge_done[e0]) continue;
    size_t e = e0;
    int side = 0;
    while (!edge_done[e]) {
      edge_done[e] = true;
      const JEnd& nxt = other_end(e, side);
      auto& inc = incident[nxt.junction_id];
      auto [e1, s1] = inc[0];
      if (e1 == e && s1 == (side == 0 ? 1 : 0)) std::tie(e1, s1) = inc[1];
      e = e1;
      side = s1;
    }
    loops_out.push_back(edges[e0].dim);
  }
}

JEnd real_end(Endpoint ep) { return {false, 0, ep}; }
JEnd junction_end(uint32_t j) { return {true, j, {}}; }

}  // namespace

Diagram compose_seq(const Diagram& top, const Diagram& bottom) {
  if (top.calculus() != bottom.calculus())
    throw CompositionError("sequential composition across calculi");
  const auto& mid_top = top.output_dims();
  const auto& mid_bot = bottom.input_dims();
  if (mid_top.size() != mid_bot.size())
    throw CompositionError("sequential composition: wire count mismatch (" +
                           std::to_string(mid_top.size()) + " outputs vs " +
                           std::to_string(mid_bot.size()) + " inputs)");
  for (size_t i = 0; i < mid_top.size(); ++i)
    if (mid_top[i] != mid_bot[i])
      throw CompositionError("sequential composition: dimension mismatch at slot " +
                             std::to_string(i) + " (" + std::to_string(mid_top[i]) + " vs " +
                             std::to_string(mid_bot[i]) + ")");

  Diagram out(top.calculus());
  for (const auto& [id, k] : top.nodes()) out.add_node_with_id(id, k);
  uint32_t offset = top.next_id();
  for (const auto& [id, k] : bottom.nodes()) out.add_node_with_id(id + offset, k);

  std::vector<JEdge> edges;
  auto map_top = [&](Endpoint ep) -> JEnd {
    if (ep.type == Endpoint::Type::Output) return junction_end(ep.id);
    return real_end(ep);
  };
  auto map_bot = [&](Endpoint ep) -> JEnd {
    if (ep.type == Endpoint::Type::Input) return junction_end(ep.id);
    if (ep.type == Endpoint::Type::Node) return real_end(Endpoint::node(ep.id + offset, ep.port));
    return real_end(ep);
  };
  for (const auto& w : top.wires()) edges.push_back({map_top(w.a), map_top(w.b), w.dim});
  for (const auto& w : bottom.wires()) edges.push_back({map_bot(w.a), map_bot(w.b), w.dim});

  std::vector<Wire> wires;
  std::vector<int> loops;
  resolve_junctions(edges, static_cast<uint32_t>(mid_top.size()), wires, loops);
  for (auto& w : wires) out.add_wire(w.a, w.b, w.dim);
  for (int dim : loops) {
    // A closed loop of carried dimension d traces to the scalar d.
    double d = top.calculus() == Calculus::ZX ? dim : dim + 1;
    if (top.calculus() == Calculus::ZX)
      out.add_node(GlobalScalar{Complex{d, 0.0}});
    else
      out.add_node(ZwScalar{Complex{d, 0.0}});
  }
  out.set_boundary(top.input_dims(), bottom.output_dims());
  return out;
}

Diagram compose_par(const Diagram& left, const Diagram& right) {
  if (left.calculus() != right.calculus())
    throw CompositionError("parallel composition across calculi");
  Diagram out(left.calculus());
  for (const auto& [id, k] : left.nodes()) out.add_node_with_id(id, k);
  uint32_t offset = left.next_id();
  for (const auto& [id, k] : right.nodes()) out.add_node_with_id(id + offset, k);

  uint32_t in_off = static_cast<uint32_t>(left.input_dims().size());
  uint32_t out_off = static_cast<uint32_t>(left.output_dims().size());
  auto map_right = [&](Endpoint ep) -> Endpoint {
    switch (ep.type) {
      case Endpoint::Type::Node:
        return Endpoint::node(ep.id + offset, ep.port);
      case Endpoint::Type::Input:
        return Endpoint::input(ep.id + in_off);
      case Endpoint::Type::Output:
        return Endpoint::output(ep.id + out_off);
    }
    return ep;
  };
  for (const auto& w : left.wires()) out.add_wire(w.a, w.b, w.dim);
  for (const auto& w : right.wires()) out.add_wire(map_right(w.a), map_right(w.b), w.dim);

  std::vector<int> ins = left.input_dims();
  ins.insert(ins.end(), right.input_dims().begin(), right.input_dims().end());
  std::vector<int> outs = left.output_dims();
  outs.insert(outs.end(), right.output_dims().begin(), right.output_dims().end());
  out.set_boundary(std::move(ins), std::move(outs));
  return out;
}

Diagram transpose(const Diagram& d) {
  Diagram out(d.calculus());
  for (const auto& [id, k] : d.nodes()) out.add_node_with_id(id, k);
  auto flip = [](Endpoint ep) -> Endpoint {
    if (ep.type == Endpoint::Type::Input) return Endpoint::output(ep.id);
    if (ep.type == Endpoint::Type::Output) return Endpoint::input(ep.id);
    return ep;
  };
  for (const auto& w : d.wires()) out.add_wire(flip(w.a), flip(w.b), w.dim);
  out.set_boundary(d.output_dims(), d.input_dims());
  return out;
}

// ---- Validation ---------------------------------------------------------

BoundarySignature validate(const Diagram& d) {
  std::map<Endpoint, int> ends;
  auto expect_dim = [&](Endpoint ep) -> int {
    switch (ep.type) {
      case Endpoint::Type::Input:
        if (ep.id >= d.input_dims().size())
          throw ValidationError("wire references missing input slot " + std::to_string(ep.id));
        return d.input_dims()[ep.id];
      case Endpoint::Type::Output:
        if (ep.id >= d.output_dims().size())
          throw ValidationError("wire references missing output slot " + std::to_string(ep.id));
        return d.output_dims()[ep.id];
      case Endpoint::Type::Node: {
        auto it = d.nodes().find(ep.id);
        if (it == d.nodes().end())
          throw ValidationError("wire references missing node " + std::to_string(ep.id));
        auto ins = kind_in_dims(it->second);
        auto outs = kind_out_dims(it->second);
        size_t p = ep.port;
        if (p < ins.size()) return ins[p];
        if (p < ins.size() + outs.size()) return outs[p - ins.size()];
        throw ValidationError("node " + std::to_string(ep.id) + " has no port " +
                              std::to_string(p));
      }
    }
    throw ValidationError("corrupt endpoint");
  };

  for (const auto& [id, k] : d.nodes()) {
    kind_check(k);
    if (kind_calculus(k) != d.calculus())
      throw ValidationError("node " + std::to_string(id) + " (" + kind_name(k) +
                            ") does not belong to the " + calculus_name(d.calculus()) +
                            " calculus");
  }
  int min_dim = d.calculus() == Calculus::ZX ? 2 : 1;
  for (const auto& w : d.wires()) {
    int da = expect_dim(w.a);
    int db = expect_dim(w.b);
    if (da != db || da != w.dim) {
      std::ostringstream os;
      os << "wire dimension mismatch (" << da << " vs " << db << ", wire says " << w.dim << ")";
      if (w.a.type == Endpoint::Type::Node) os << " at node " << w.a.id;
      else if (w.b.type == Endpoint::Type::Node) os << " at node " << w.b.id;
      throw ValidationError(os.str());
    }
    if (w.dim < min_dim)
      throw ValidationError("wire dimension " + std::to_string(w.dim) + " below minimum " +
                            std::to_string(min_dim));
    if (w.a == w.b) throw ValidationError("wire with identical endpoints");
    ends[w.a]++;
    ends[w.b]++;
  }
  for (const auto& [ep, n] : ends)
    if (n != 1) {
      std::ostringstream os;
      os << "endpoint used by " << n << " wires";
      if (ep.type == Endpoint::Type::Node) os << " (node " << ep.id << " port " << ep.port << ")";
      throw ValidationError(os.str());
    }
  for (const auto& [id, k] : d.nodes()) {
    size_t arity = kind_in_dims(k).size() + kind_out_dims(k).size();
    for (uint32_t p = 0; p < arity; ++p)
      if (!ends.count(Endpoint::node(id, p)))
        throw ValidationError("dangling port " + std::to_string(p) + " on node " +
                              std::to_string(id) + " (" + kind_name(k) + ")");
  }
  for (uint32_t s = 0; s < d.input_dims().size(); ++s)
    if (!ends.count(Endpoint::input(s)))
      throw ValidationError("unwired input slot " + std::to_string(s));
  for (uint32_t s = 0; s < d.output_dims().size(); ++s)
    if (!ends.count(Endpoint::output(s)))
      throw ValidationError("unwired output slot " + std::to_string(s));
  return d.signature();
}

// ---- Derived constructors ------------------------------------------------

Diagram general_z_spider(const std::vector<int>& in_dims, const std::vector<int>& out_dims,
                         const PhaseVector& r) {
  ZSpider s{in_dims, out_dims, r};
  int a = min_leg_dim(s);
  if (r.size() != a)
    throw ValidationError("phase vector length " + std::to_string(r.size()) +
                          " does not match minimal leg dimension " + std::to_string(a));
  return Diagram::generator(std::move(s));
}

namespace {

// n -> 1 modular-sum tree of 2->1 X-spiders; n = 0 is the |0> state.
Diagram x_merge(int dim, int n) {
  if (n == 0) return Diagram::generator(BasisKet{0, dim});
  Diagram acc = Diagram::wire(Calculus::ZX, dim);
  for (int i = 1; i < n; ++i) {
    Diagram layer = compose_par(acc, Diagram::wire(Calculus::ZX, dim));
    acc = compose_seq(layer, Diagram::generator(XSpider{dim, 2, 1}));
  }
  return acc;
}

}  // namespace

Diagram x_spider(int dim, int n_in, int n_out) {
  if (dim < 2) throw ValidationError("x_spider dimension < 2");
  if (n_in < 0 || n_out < 0) throw ValidationError("x_spider arity negative");
  return compose_seq(x_merge(dim, n_in), transpose(x_merge(dim, n_out)));
}

Diagram identities(Calculus c, const std::vector<int>& dims) {
  Diagram acc = Diagram::empty(c);
  for (int d : dims) acc = compose_par(acc, Diagram::wire(c, d));
  return acc;
}

Diagram tensor_stack(const std::vector<Diagram>& parts, Calculus c) {
  Diagram acc = Diagram::empty(c);
  for (const auto& p : parts) acc = compose_par(acc, p);
  return acc;
}

// ---- Structural equality -------------------------------------------------

namespace {

// Deterministic relabeling: breadth-first from the boundary, then leftover
// components keyed by kind/params. Ties between identical disconnected
// components do not affect the serialized form.
std::map<uint32_t, uint32_t> canonical_relabeling(const Diagram& d) {
  std::map<Endpoint, std::pair<Endpoint, int>> adj;  // endpoint -> other end
  for (const auto& w : d.wires()) {
    adj[w.a] = {w.b, w.dim};
    adj[w.b] = {w.a, w.dim};
  }
  std::map<uint32_t, uint32_t> label;
  uint32_t next = 0;
  std::deque<uint32_t> queue;
  auto visit_endpoint = [&](Endpoint ep) {
    if (ep.type != Endpoint::Type::Node) return;
    if (label.count(ep.id)) return;
    label[ep.id] = next++;
    queue.push_back(ep.id);
  };
  auto drain = [&]() {
    while (!queue.empty()) {
      uint32_t id = queue.front();
      queue.pop_front();
      const auto& k = d.nodes().at(id);
      size_t arity = kind_in_dims(k).size() + kind_out_dims(k).size();
      for (uint32_t p = 0; p < arity; ++p) {
        auto it = adj.find(Endpoint::node(id, p));
        if (it != adj.end()) visit_endpoint(it->second.first);
      }
    }
  };
  for (uint32_t s = 0; s < d.input_dims().size(); ++s) {
    auto it = adj.find(Endpoint::input(s));
    if (it != adj.end()) visit_endpoint(it->second.first);
    drain();
  }
  for (uint32_t s = 0; s < d.output_dims().size(); ++s) {
    auto it = adj.find(Endpoint::output(s));
    if (it != adj.end()) visit_endpoint(it->second.first);
    drain();
  }
  // Disconnected leftovers: seed by (kind name, params) then id.
  std::vector<std::pair<std::string, uint32_t>> rest;
  for (const auto& [id, k] : d.nodes())
    if (!label.count(id)) rest.push_back({kind_name(k) + node_kind_to_json(k).dump(), id});
  std::sort(rest.begin(), rest.end());
  for (const auto& [key, id] : rest) {
    visit_endpoint(Endpoint::node(id, 0));
    if (!label.count(id)) {  // node with zero ports (scalars)
      label[id] = next++;
    }
    drain();
  }
  return label;
}

Diagram relabeled(const Diagram& d) {
  auto label = canonical_relabeling(d);
  Diagram out(d.calculus());
  std::vector<std::pair<uint32_t, NodeKind>> nodes;
  for (const auto& [id, k] : d.nodes()) nodes.push_back({label.at(id), k});
  std::sort(nodes.begin(), nodes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [id, k] : nodes) out.add_node_with_id(id, k);
  auto map_ep = [&](Endpoint ep) {
    if (ep.type == Endpoint::Type::Node) return Endpoint::node(label.at(ep.id), ep.port);
    return ep;
  };
  for (const auto& w : d.wires()) out.add_wire(map_ep(w.a), map_ep(w.b), w.dim);
  out.set_boundary(d.input_dims(), d.output_dims());
  return out;
}

}  // namespace

bool structural_equal(const Diagram& a, const Diagram& b) {
  if (a.calculus() != b.calculus()) return false;
  return serialize(relabeled(a)) == serialize(relabeled(b));
}

}  // namespace zxfd
