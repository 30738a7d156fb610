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

#include "zxfd/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zxfd {

namespace {

int64_t checked_volume(const std::vector<int64_t>& shape, int64_t budget) {
  int64_t vol = 1;
  for (int64_t s : shape) {
    if (s <= 0) throw ResourceError("tensor axis of nonpositive size");
    if (vol > budget / s + 1) vol = budget + 1;  // saturate
    else
      vol *= s;
    if (vol > budget)
      throw ResourceError("contraction exceeds the entry budget of " + std::to_string(budget) +
                          " entries; use smaller dimensions or fewer legs");
  }
  return vol;
}

std::vector<int64_t> strides_of(const std::vector<int64_t>& shape) {
  std::vector<int64_t> st(shape.size(), 1);
  for (int i = static_cast<int>(shape.size()) - 2; i >= 0; --i) st[i] = st[i + 1] * shape[i + 1];
  return st;
}

}  // namespace

Tensor::Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
  int64_t vol = 1;
  for (int64_t s : shape_) vol *= s;
  data_.assign(static_cast<size_t>(vol), Complex{0.0, 0.0});
}

Tensor Tensor::scalar(Complex v) {
  Tensor t;
  t.data_[0] = v;
  return t;
}

Complex& Tensor::at(const std::vector<int64_t>& idx) {
  return const_cast<Complex&>(static_cast<const Tensor*>(this)->at(idx));
}

const Complex& Tensor::at(const std::vector<int64_t>& idx) const {
  int64_t flat = 0;
  auto st = strides_of(shape_);
  for (size_t i = 0; i < shape_.size(); ++i) flat += idx[i] * st[i];
  return data_[static_cast<size_t>(flat)];
}

double Tensor::max_abs() const {
  double m = 0.0;
  for (const auto& c : data_) m = std::max(m, std::abs(c));
  return m;
}

Tensor Tensor::product(const Tensor& a, const Tensor& b, int64_t entry_budget) {
  std::vector<int64_t> shape = a.shape_;
  shape.insert(shape.end(), b.shape_.begin(), b.shape_.end());
  checked_volume(shape, entry_budget);
  Tensor out(std::move(shape));
  size_t nb = b.data_.size();
  for (size_t i = 0; i < a.data_.size(); ++i)
    for (size_t j = 0; j < nb; ++j) out.data_[i * nb + j] = a.data_[i] * b.data_[j];
  return out;
}

Tensor Tensor::contracted(const std::vector<std::pair<int, int>>& pairs) const {
  if (pairs.empty()) return *this;
  std::vector<bool> bound(shape_.size(), false);
  for (auto [i, j] : pairs) {
    if (shape_[static_cast<size_t>(i)] != shape_[static_cast<size_t>(j)])
      throw ResourceError("contraction of axes with different sizes");
    bound[static_cast<size_t>(i)] = bound[static_cast<size_t>(j)] = true;
  }
  std::vector<int> free_axes;
  for (size_t i = 0; i < shape_.size(); ++i)
    if (!bound[i]) free_axes.push_back(static_cast<int>(i));

  std::vector<int64_t> out_shape;
  for (int ax : free_axes) out_shape.push_back(shape_[static_cast<size_t>(ax)]);
  Tensor out(out_shape);

  auto st = strides_of(shape_);
  int64_t bound_vol = 1;
  for (auto [i, j] : pairs) bound_vol *= shape_[static_cast<size_t>(i)];

  std::vector<int64_t> fidx(free_axes.size(), 0);
  int64_t out_n = out.size();
  for (int64_t fo = 0; fo < out_n; ++fo) {
    int64_t base = 0;
    for (size_t i = 0; i < free_axes.size(); ++i)
      base += fidx[i] * st[static_cast<size_t>(free_axes[i])];
    Complex acc{0.0, 0.0};
    std::vector<int64_t> bidx(pairs.size(), 0);
    for (int64_t bo = 0; bo < bound_vol; ++bo) {
      int64_t flat = base;
      for (size_t p = 0; p < pairs.size(); ++p)
        flat += bidx[p] * (st[static_cast<size_t>(pairs[p].first)] +
                           st[static_cast<size_t>(pairs[p].second)]);
      acc += data_[static_cast<size_t>(flat)];
      for (int p = static_cast<int>(pairs.size()) - 1; p >= 0; --p) {
        if (++bidx[static_cast<size_t>(p)] <
            shape_[static_cast<size_t>(pairs[static_cast<size_t>(p)].first)])
          break;
        bidx[static_cast<size_t>(p)] = 0;
      }
    }
    out.data_[static_cast<size_t>(fo)] = acc;
    for (int i = static_cast<int>(free_axes.size()) - 1; i >= 0; --i) {
      if (++fidx[static_cast<size_t>(i)] < out_shape[static_cast<size_t>(i)]) break;
      fidx[static_cast<size_t>(i)] = 0;
    }
  }
  return out;
}

Tensor Tensor::permuted(const std::vector<int>& perm) const {
  // perm[i] = source axis placed at position i of the result
  std::vector<int64_t> out_shape(shape_.size());
  for (size_t i = 0; i < perm.size(); ++i)
    out_shape[i] = shape_[static_cast<size_t>(perm[i])];
  Tensor out(out_shape);
  if (shape_.empty()) {
    out.data_ = data_;
    return out;
  }
  auto src_st = strides_of(shape_);
  std::vector<int64_t> idx(shape_.size(), 0);
  for (size_t flat_out = 0; flat_out < out.data_.size(); ++flat_out) {
    int64_t flat_src = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      flat_src += idx[i] * src_st[static_cast<size_t>(perm[i])];
    out.data_[flat_out] = data_[static_cast<size_t>(flat_src)];
    for (int i = static_cast<int>(out_shape.size()) - 1; i >= 0; --i) {
      if (++idx[static_cast<size_t>(i)] < out_shape[static_cast<size_t>(i)]) break;
      idx[static_cast<size_t>(i)] = 0;
    }
  }
  return out;
}

EquivalenceVerdict tensor_equal(const Tensor& x, const Tensor& y, double tol, EqualMode mode) {
  if (x.shape() != y.shape()) throw ResourceError("tensor_equal: shape mismatch");
  EquivalenceVerdict v;
  v.mode = mode;
  if (mode == EqualMode::UpToGlobalScalar) {
    Complex num{0.0, 0.0};
    double den = 0.0;
    for (size_t i = 0; i < x.data().size(); ++i) {
      num += std::conj(y.data()[i]) * x.data()[i];
      den += std::norm(y.data()[i]);
    }
    v.fitted_scalar = den == 0.0 ? Complex{0.0, 0.0} : num / den;
    double dev = 0.0, mx = 0.0;
    for (size_t i = 0; i < x.data().size(); ++i) {
      dev = std::max(dev, std::abs(x.data()[i] - v.fitted_scalar * y.data()[i]));
      mx = std::max({mx, std::abs(x.data()[i]), std::abs(v.fitted_scalar * y.data()[i])});
    }
    v.max_abs_deviation = dev;
    v.equal = dev <= tol * std::max(1.0, mx);
    return v;
  }
  double dev = 0.0;
  for (size_t i = 0; i < x.data().size(); ++i)
    dev = std::max(dev, std::abs(x.data()[i] - y.data()[i]));
  v.max_abs_deviation = dev;
  v.equal = dev <= tol * std::max({1.0, x.max_abs(), y.max_abs()});
  return v;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double sqrt_factorial(int n) { return std::sqrt(factorial(n)); }

double multinomial(const std::vector<int>& parts) {
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  double m = factorial(total);
  for (int p : parts) m /= factorial(p);
  return m;
}

}  // namespace zxfd
