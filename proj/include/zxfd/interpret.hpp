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

#include "zxfd/diagram.hpp"
#include "zxfd/tensor.hpp"

namespace zxfd {

/// Standard interpretation of a single generator, indices [outputs, inputs].
Tensor node_tensor(const NodeKind& k);

/// Standard interpretation of a diagram. Contraction walks the wire graph in
/// a deterministic greedy order; intermediates above the entry budget raise
/// ResourceError.
Tensor interpret(const Diagram& d, int64_t entry_budget = kDefaultEntryBudget);

/// Output-indexed slice [[d]] |in_indices>.
Tensor apply_basis(const Diagram& d, const std::vector<int64_t>& in_indices,
                   int64_t entry_budget = kDefaultEntryBudget);

/// Semantic comparison of two diagrams of equal boundary signature.
EquivalenceVerdict diagram_equal(const Diagram& a, const Diagram& b, double tol,
                                 EqualMode mode = EqualMode::Exact,
                                 int64_t entry_budget = kDefaultEntryBudget);

}  // namespace zxfd
