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

#include <cstdint>
#include <string>
#include <vector>

#include "zxfd/diagram.hpp"

namespace zxfd {

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense complex multi-array, row-major; shape lists output indices first,
/// then input indices, each group left-to-right in boundary order.
class Tensor {
 public:
  Tensor() : shape_{}, data_{Complex{1.0, 0.0}} {}
  explicit Tensor(std::vector<int64_t> shape);
  static Tensor scalar(Complex v);

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t size() const { return static_cast<int64_t>(data_.size()); }
  std::vector<Complex>& data() { return data_; }
  const std::vector<Complex>& data() const { return data_; }

  Complex& at(const std::vector<int64_t>& idx);
  const Complex& at(const std::vector<int64_t>& idx) const;

  double max_abs() const;

  static Tensor product(const Tensor& a, const Tensor& b, int64_t entry_budget);
  /// Generalized trace: sum over each (axis, axis) pair set equal.
  Tensor contracted(const std::vector<std::pair<int, int>>& pairs) const;
  Tensor permuted(const std::vector<int>& perm) const;

 private:
  std::vector<int64_t> shape_;
  std::vector<Complex> data_;
};

enum class EqualMode { Exact, UpToGlobalScalar };

struct EquivalenceVerdict {
  bool equal = false;
  double max_abs_deviation = 0.0;
  EqualMode mode = EqualMode::Exact;
  Complex fitted_scalar{1.0, 0.0};
};

/// Exact mode: max|x-y| <= tol * max(1, |x|_inf, |y|_inf). Scalar mode fits
/// the least-squares c and tests x against c*y, reporting c.
EquivalenceVerdict tensor_equal(const Tensor& x, const Tensor& y, double tol,
                                EqualMode mode = EqualMode::Exact);

// Numeric helpers shared by semantics, rules and translation.
double factorial(int n);
double sqrt_factorial(int n);
double multinomial(const std::vector<int>& parts);

constexpr int64_t kDefaultEntryBudget = int64_t{1} << 24;

}  // namespace zxfd
