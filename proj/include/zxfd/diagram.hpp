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

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace zxfd {

using Complex = std::complex<double>;

enum class Calculus { ZX, ZW };

std::string calculus_name(Calculus c);

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CompositionError : DiagramError {
  using DiagramError::DiagramError;
};
struct ValidationError : DiagramError {
  using DiagramError::DiagramError;
};
struct ParseError : DiagramError {
  using DiagramError::DiagramError;
};
struct SchemaError : ParseError {
  using ParseError::ParseError;
};

/// Z-spider parameter vector; entry 0 is pinned to 1 exactly.
class PhaseVector {
 public:
  explicit PhaseVector(std::vector<Complex> entries);
  static PhaseVector ones(int length);
  static PhaseVector delta(int length);  // (1, 0, ..., 0)

  int size() const { return static_cast<int>(entries_.size()); }
  const Complex& operator[](int k) const { return entries_[static_cast<size_t>(k)]; }
  const std::vector<Complex>& entries() const { return entries_; }

  bool operator==(const PhaseVector& other) const { return entries_ == other.entries_; }

 private:
  std::vector<Complex> entries_;
};

// ---- Generator node kinds ----------------------------------------------
//
// ZX wires carry the qudit dimension itself (>= 2); ZW wires carry a label
// a meaning an (a+1)-dimensional qudit (a >= 1). Ports of a node share one
// index space: inputs 0..n-1 first, then outputs n..n+m-1.

struct ZSpider {
  std::vector<int> in_dims;
  std::vector<int> out_dims;
  PhaseVector phase;  // length = min over all leg dims
};

struct XSpider {
  int dim = 2;
  int n_in = 0;
  int n_out = 0;
};

struct Embedding {
  int dim_in = 2;
  int dim_out = 2;
};

struct BasisKet {
  int index = 0;
  int dim = 2;
};

struct Identity {
  int dim = 2;
};

struct Swap {
  int dim_a = 2;
  int dim_b = 2;
};

struct Cap {
  int dim = 2;
};

struct Cup {
  int dim = 2;
};

struct GlobalScalar {
  Complex value{1.0, 0.0};
};

struct ZwSpider {
  Complex r{1.0, 0.0};
  int label = 1;
  int n_in = 0;
  int n_out = 0;
};

struct WNode {
  int big_label = 1;                // single input leg
  std::vector<int> small_labels;    // output legs
};

struct ZwKet {
  int index = 1;
  int label = 1;
};

struct ZwScalar {
  Complex value{1.0, 0.0};
};

struct ZwIdentity {
  int label = 1;
};

struct ZwSwap {
  int label_a = 1;
  int label_b = 1;
};

struct ZwCap {
  int label = 1;
};

struct ZwCup {
  int label = 1;
};

using NodeKind =
    std::variant<ZSpider, XSpider, Embedding, BasisKet, Identity, Swap, Cap, Cup, GlobalScalar,
                 ZwSpider, WNode, ZwKet, ZwScalar, ZwIdentity, ZwSwap, ZwCap, ZwCup>;

Calculus kind_calculus(const NodeKind& k);
std::string kind_name(const NodeKind& k);
std::vector<int> kind_in_dims(const NodeKind& k);
std::vector<int> kind_out_dims(const NodeKind& k);
bool kind_equal(const NodeKind& a, const NodeKind& b);
void kind_check(const NodeKind& k);  // throws ValidationError on a broken invariant

// ---- Open graph ---------------------------------------------------------

struct Endpoint {
  enum class Type : uint8_t { Input, Node, Output };
  Type type = Type::Node;
  uint32_t id = 0;    // node id, or boundary slot index
  uint32_t port = 0;  // node port; 0 for boundary endpoints

  static Endpoint node(uint32_t id, uint32_t port) { return {Type::Node, id, port}; }
  static Endpoint input(uint32_t slot) { return {Type::Input, slot, 0}; }
  static Endpoint output(uint32_t slot) { return {Type::Output, slot, 0}; }

  bool operator==(const Endpoint& o) const = default;
  bool operator<(const Endpoint& o) const;
};

struct Wire {
  Endpoint a;
  Endpoint b;
  int dim = 2;  // ZX: dimension, ZW: label
};

struct BoundarySignature {
  std::vector<int> inputs;
  std::vector<int> outputs;
  bool operator==(const BoundarySignature&) const = default;
};

/// Immutable-after-construction open graph of generator nodes. Diagrams are
/// values: composition operators return new diagrams.
class Diagram {
 public:
  explicit Diagram(Calculus c) : calculus_(c) {}

  static Diagram empty(Calculus c) { return Diagram(c); }
  /// A single bare wire from input slot 0 to output slot 0.
  static Diagram wire(Calculus c, int dim);
  /// One generator node with all ports wired straight to fresh boundary slots.
  static Diagram generator(NodeKind k);
  /// Nodeless rewiring: input i connects to output perm[i].
  static Diagram route(Calculus c, const std::vector<int>& in_dims, const std::vector<int>& perm);

  Calculus calculus() const { return calculus_; }
  const std::map<uint32_t, NodeKind>& nodes() const { return nodes_; }
  const std::vector<Wire>& wires() const { return wires_; }
  const std::vector<int>& input_dims() const { return input_dims_; }
  const std::vector<int>& output_dims() const { return output_dims_; }
  uint32_t next_id() const { return next_id_; }

  // Low-level construction (deserialization, rewriting, gadget assembly).
  uint32_t add_node(NodeKind k);
  void add_node_with_id(uint32_t id, NodeKind k);
  void add_wire(Endpoint a, Endpoint b, int dim);
  void set_boundary(std::vector<int> in_dims, std::vector<int> out_dims);

  BoundarySignature signature() const { return {input_dims_, output_dims_}; }

 private:
  Calculus calculus_;
  std::map<uint32_t, NodeKind> nodes_;
  std::vector<Wire> wires_;
  std::vector<int> input_dims_;
  std::vector<int> output_dims_;
  uint32_t next_id_ = 0;
};

/// Plug top's outputs into bottom's inputs. Signatures must agree slot by
/// slot; the error names the first offending slot.
Diagram compose_seq(const Diagram& top, const Diagram& bottom);

/// Side-by-side composition; boundaries concatenate.
Diagram compose_par(const Diagram& left, const Diagram& right);

/// Exchange inputs and outputs (slot order kept). Interpretation-wise this
/// is the cap/cup bending of every boundary leg, i.e. the index transpose.
Diagram transpose(const Diagram& d);

/// Check all structural invariants; returns the boundary signature.
BoundarySignature validate(const Diagram& d);

/// The mixed-dimensional Z-spider as a diagram.
Diagram general_z_spider(const std::vector<int>& in_dims, const std::vector<int>& out_dims,
                         const PhaseVector& r);

/// The qudit X-spider built inductively from the 2->1 generator, its
/// transpose, the |0> base state and plain wires.
Diagram x_spider(int dim, int n_in, int n_out);

/// Equality up to canonical node relabeling (wiring, kinds, boundary order).
bool structural_equal(const Diagram& a, const Diagram& b);

// Convenience stacks used throughout rule/gadget construction.
Diagram identities(Calculus c, const std::vector<int>& dims);
Diagram tensor_stack(const std::vector<Diagram>& parts, Calculus c);

}  // namespace zxfd
