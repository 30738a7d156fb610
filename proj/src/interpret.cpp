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

#include "zxfd/interpret.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zxfd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Iterate all multi-indices of a shape.
template <typename F>
void for_each_index(const std::vector<int64_t>& shape, F&& f) {
  std::vector<int64_t> idx(shape.size(), 0);
  int64_t vol = 1;
  for (int64_t s : shape) vol *= s;
  for (int64_t i = 0; i < vol; ++i) {
    f(idx);
    for (int a = static_cast<int>(shape.size()) - 1; a >= 0; --a) {
      if (++idx[static_cast<size_t>(a)] < shape[static_cast<size_t>(a)]) break;
      idx[static_cast<size_t>(a)] = 0;
    }
  }
}

Tensor delta_identity(int64_t size) {
  Tensor t({size, size});
  for (int64_t k = 0; k < size; ++k) t.at({k, k}) = 1.0;
  return t;
}

}  // namespace

Tensor node_tensor(const NodeKind& kind) {
  return std::visit(
      overloaded{
          [](const ZSpider& s) {
            std::vector<int64_t> shape;
            for (int d : s.out_dims) shape.push_back(d);
            for (int d : s.in_dims) shape.push_back(d);
            Tensor t(shape);
            for (int k = 0; k < s.phase.size(); ++k)
              t.at(std::vector<int64_t>(shape.size(), k)) = s.phase[k];
            return t;
          },
          [](const XSpider& s) {
            std::vector<int64_t> shape(static_cast<size_t>(s.n_out + s.n_in), s.dim);
            Tensor t(shape);
            for_each_index(shape, [&](const std::vector<int64_t>& idx) {
              int64_t so = 0, si = 0;
              for (int a = 0; a < s.n_out; ++a) so += idx[static_cast<size_t>(a)];
              for (int a = 0; a < s.n_in; ++a) si += idx[static_cast<size_t>(s.n_out + a)];
              if (so % s.dim == si % s.dim) t.at(idx) = 1.0;
            });
            return t;
          },
          [](const Embedding& e) {
            Tensor t({e.dim_out, e.dim_in});
            int m = std::min(e.dim_in, e.dim_out);
            for (int64_t k = 0; k < m; ++k) t.at({k, k}) = 1.0;
            return t;
          },
          [](const BasisKet& b) {
            Tensor t({b.dim});
            t.at({b.index}) = 1.0;
            return t;
          },
          [](const Identity& i) { return delta_identity(i.dim); },
          [](const Swap& s) {
            Tensor t({s.dim_b, s.dim_a, s.dim_a, s.dim_b});
            for (int64_t x = 0; x < s.dim_a; ++x)
              for (int64_t y = 0; y < s.dim_b; ++y) t.at({y, x, x, y}) = 1.0;
            return t;
          },
          [](const Cap& c) { return delta_identity(c.dim); },
          [](const Cup& c) { return delta_identity(c.dim); },
          [](const GlobalScalar& g) { return Tensor::scalar(g.value); },
          [](const ZwSpider& s) {
            int64_t size = s.label + 1;
            if (s.n_in + s.n_out == 0) {
              Complex acc{0.0, 0.0};
              Complex rk{1.0, 0.0};
              for (int k = 0; k <= s.label; ++k) {
                acc += rk / factorial(k);
                rk *= s.r;
              }
              return Tensor::scalar(acc);
            }
            std::vector<int64_t> shape(static_cast<size_t>(s.n_in + s.n_out), size);
            Tensor t(shape);
            Complex rk{1.0, 0.0};
            for (int k = 0; k <= s.label; ++k) {
              double w = std::pow(sqrt_factorial(k), s.n_in + s.n_out - 2);
              t.at(std::vector<int64_t>(shape.size(), k)) = rk * w;
              rk *= s.r;
            }
            return t;
          },
          [](const WNode& w) {
            std::vector<int64_t> shape;
            for (int b : w.small_labels) shape.push_back(b + 1);
            shape.push_back(w.big_label + 1);
            Tensor t(shape);
            for_each_index(shape, [&](const std::vector<int64_t>& idx) {
              int64_t total = 0;
              std::vector<int> parts;
              for (size_t a = 0; a + 1 < shape.size(); ++a) {
                total += idx[a];
                parts.push_back(static_cast<int>(idx[a]));
              }
              if (total == idx.back()) t.at(idx) = std::sqrt(multinomial(parts));
            });
            return t;
          },
          [](const ZwKet& z) {
            Tensor t({z.label + 1});
            if (z.index >= 1 && z.index <= z.label)
              t.at({z.index}) = sqrt_factorial(z.index);
            return t;
          },
          [](const ZwScalar& z) { return Tensor::scalar(z.value); },
          [](const ZwIdentity& i) { return delta_identity(i.label + 1); },
          [](const ZwSwap& s) {
            int64_t sa = s.label_a + 1, sb = s.label_b + 1;
            Tensor t({sb, sa, sa, sb});
            for (int64_t x = 0; x < sa; ++x)
              for (int64_t y = 0; y < sb; ++y) t.at({y, x, x, y}) = 1.0;
            return t;
          },
          [](const ZwCap& c) { return delta_identity(c.label + 1); },
          [](const ZwCup& c) { return delta_identity(c.label + 1); },
      },
      kind);
}

namespace {

struct NetEntry {
  Tensor tensor;
  std::vector<int> axis_wires;  // wire id per open axis
  uint32_t order_key = 0;
};

// Contract duplicate wire labels inside one entry (self loops).
void self_contract(NetEntry& e) {
  while (true) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> rest;
    std::map<int, int> seen;
    bool dup = false;
    for (size_t a = 0; a < e.axis_wires.size(); ++a) {
      auto it = seen.find(e.axis_wires[a]);
      if (it == seen.end())
        seen[e.axis_wires[a]] = static_cast<int>(a);
      else {
        pairs.push_back({it->second, static_cast<int>(a)});
        dup = true;
        seen.erase(it);
      }
    }
    if (!dup) return;
    std::vector<bool> bound(e.axis_wires.size(), false);
    for (auto [i, j] : pairs) bound[static_cast<size_t>(i)] = bound[static_cast<size_t>(j)] = true;
    for (size_t a = 0; a < e.axis_wires.size(); ++a)
      if (!bound[a]) rest.push_back(e.axis_wires[a]);
    e.tensor = e.tensor.contracted(pairs);
    e.axis_wires = rest;
  }
}

NetEntry fold(const NetEntry& acc, const NetEntry& nxt, int64_t budget) {
  NetEntry out;
  out.order_key = acc.order_key;
  out.tensor = Tensor::product(acc.tensor, nxt.tensor, budget);
  out.axis_wires = acc.axis_wires;
  out.axis_wires.insert(out.axis_wires.end(), nxt.axis_wires.begin(), nxt.axis_wires.end());
  self_contract(out);
  return out;
}

}  // namespace

Tensor interpret(const Diagram& d, int64_t entry_budget) {
  validate(d);

  std::vector<NetEntry> entries;
  std::map<Endpoint, int> end_wire;  // node/bnd endpoint -> wire id
  int next_wire = 0;
  auto is_boundary = [](const Endpoint& ep) { return ep.type != Endpoint::Type::Node; };

  for (const auto& w : d.wires()) {
    if (is_boundary(w.a) && is_boundary(w.b)) {
      // Bare boundary-to-boundary wire: a delta tensor carrying two indices.
      int64_t size = d.calculus() == Calculus::ZX ? w.dim : w.dim + 1;
      NetEntry e;
      e.tensor = delta_identity(size);
      e.axis_wires = {next_wire, next_wire + 1};
      e.order_key = 0x40000000u + static_cast<uint32_t>(entries.size());
      end_wire[w.a] = next_wire;
      end_wire[w.b] = next_wire + 1;
      next_wire += 2;
      entries.push_back(std::move(e));
    } else {
      int id = next_wire++;
      end_wire[w.a] = id;
      end_wire[w.b] = id;
    }
  }

  for (const auto& [id, k] : d.nodes()) {
    NetEntry e;
    e.tensor = node_tensor(k);
    e.order_key = id;
    size_t n_in = kind_in_dims(k).size();
    size_t n_out = kind_out_dims(k).size();
    e.axis_wires.resize(n_in + n_out);
    for (uint32_t p = 0; p < n_in + n_out; ++p) {
      int axis = p < n_in ? static_cast<int>(n_out + p) : static_cast<int>(p - n_in);
      e.axis_wires[static_cast<size_t>(axis)] = end_wire.at(Endpoint::node(id, p));
    }
    self_contract(e);
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(),
            [](const NetEntry& a, const NetEntry& b) { return a.order_key < b.order_key; });

  // Greedy deterministic contraction: absorb the unused entry sharing the
  // most wires with the accumulator; start a fresh component when none does.
  std::vector<bool> used(entries.size(), false);
  std::vector<NetEntry> components;
  for (size_t start = 0; start < entries.size(); ++start) {
    if (used[start]) continue;
    used[start] = true;
    NetEntry acc = entries[start];
    while (true) {
      int best = -1, best_shared = 0;
      for (size_t j = 0; j < entries.size(); ++j) {
        if (used[j]) continue;
        int shared = 0;
        for (int wa : entries[j].axis_wires)
          if (std::find(acc.axis_wires.begin(), acc.axis_wires.end(), wa) != acc.axis_wires.end())
            ++shared;
        if (shared > best_shared) {
          best_shared = shared;
          best = static_cast<int>(j);
        }
      }
      if (best < 0) break;
      used[static_cast<size_t>(best)] = true;
      acc = fold(acc, entries[static_cast<size_t>(best)], entry_budget);
    }
    components.push_back(std::move(acc));
  }

  NetEntry result;
  result.tensor = Tensor::scalar(1.0);
  for (const auto& comp : components) result = fold(result, comp, entry_budget);

  // Order the surviving axes as [outputs, inputs] in boundary order.
  std::vector<int> perm;
  auto axis_of = [&](Endpoint ep) {
    auto it = end_wire.find(ep);
    if (it == end_wire.end()) throw ResourceError("internal: unwired boundary slot");
    auto pos = std::find(result.axis_wires.begin(), result.axis_wires.end(), it->second);
    if (pos == result.axis_wires.end()) throw ResourceError("internal: lost boundary axis");
    return static_cast<int>(pos - result.axis_wires.begin());
  };
  for (uint32_t s = 0; s < d.output_dims().size(); ++s) perm.push_back(axis_of(Endpoint::output(s)));
  for (uint32_t s = 0; s < d.input_dims().size(); ++s) perm.push_back(axis_of(Endpoint::input(s)));
  return result.tensor.permuted(perm);
}

Tensor apply_basis(const Diagram& d, const std::vector<int64_t>& in_indices,
                   int64_t entry_budget) {
  if (in_indices.size() != d.input_dims().size())
    throw ValidationError("apply_basis: expected " + std::to_string(d.input_dims().size()) +
                          " basis labels, got " + std::to_string(in_indices.size()));
  for (size_t i = 0; i < in_indices.size(); ++i) {
    int64_t size = d.calculus() == Calculus::ZX ? d.input_dims()[i] : d.input_dims()[i] + 1;
    if (in_indices[i] < 0 || in_indices[i] >= size)
      throw ValidationError("apply_basis: label " + std::to_string(in_indices[i]) +
                            " out of range at slot " + std::to_string(i));
  }
  Tensor full = interpret(d, entry_budget);
  size_t n_out = d.output_dims().size();
  std::vector<int64_t> out_shape(full.shape().begin(),
                                 full.shape().begin() + static_cast<int64_t>(n_out));
  Tensor out(out_shape);
  std::vector<int64_t> idx(full.shape().size(), 0);
  for (size_t i = 0; i < in_indices.size(); ++i) idx[n_out + i] = in_indices[i];
  std::vector<int64_t> oidx(n_out, 0);
  int64_t vol = out.size();
  for (int64_t flat = 0; flat < vol; ++flat) {
    for (size_t a = 0; a < n_out; ++a) idx[a] = oidx[a];
    out.data()[static_cast<size_t>(flat)] = full.at(idx);
    for (int a = static_cast<int>(n_out) - 1; a >= 0; --a) {
      if (++oidx[static_cast<size_t>(a)] < out_shape[static_cast<size_t>(a)]) break;
      oidx[static_cast<size_t>(a)] = 0;
    }
  }
  return out;
}

EquivalenceVerdict diagram_equal(const Diagram& a, const Diagram& b, double tol, EqualMode mode,
                                 int64_t entry_budget) {
  if (!(a.signature() == b.signature()))
    throw ValidationError("diagram_equal: boundary signature mismatch");
  return tensor_equal(interpret(a, entry_budget), interpret(b, entry_budget), tol, mode);
}

}  // namespace zxfd
