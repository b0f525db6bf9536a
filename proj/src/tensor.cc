// mmasr/tensor.cc

// Copyright 2026   MMASR Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "mmasr/tensor.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace mmasr {
namespace tensor {

long NumelOf(const std::vector<int>& shape) {
  long n = 1;
  for (int d : shape) n *= d;
  return n;
}

Tensor::Tensor(std::vector<int> s, std::vector<double> values)
    : shape(std::move(s)), v(std::move(values)) {
  if (shape.empty() || shape.size() > 3) {
    throw std::invalid_argument("Tensor: rank must be 1..3, got shape " +
                                ShapeStr(shape));
  }
  for (int d : shape) {
    if (d <= 0) throw std::invalid_argument("Tensor: nonpositive dim in " +
                                            ShapeStr(shape));
  }
  if (NumelOf(shape) != static_cast<long>(v.size())) {
    throw std::invalid_argument("Tensor: shape " + ShapeStr(shape) +
                                " does not match " + std::to_string(v.size()) +
                                " values");
  }
}

Tensor Tensor::Zeros(std::vector<int> shape) {
  long n = NumelOf(shape);
  return Tensor(std::move(shape), std::vector<double>(n, 0.0));
}

Tensor Tensor::Full(std::vector<int> shape, double value) {
  long n = NumelOf(shape);
  return Tensor(std::move(shape), std::vector<double>(n, value));
}

Tensor Tensor::Vec(std::vector<double> values) {
  int n = static_cast<int>(values.size());
  return Tensor({n}, std::move(values));
}

Tensor Tensor::Mat(int rows, int cols, std::vector<double> values) {
  return Tensor({rows, cols}, std::move(values));
}

Tensor Tensor::Identity(int n) {
  Tensor t = Zeros({n, n});
  for (int i = 0; i < n; ++i) t.at(i, i) = 1.0;
  return t;
}

bool Tensor::all_finite() const {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

std::string ShapeStr(const std::vector<int>& shape) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << "x";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

void CheckFinite(const Tensor& t, const std::string& where) {
  if (!t.all_finite()) {
    throw std::invalid_argument(where + ": non-finite value in tensor " +
                                ShapeStr(t.shape));
  }
}

double MaxAbsDiff(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("MaxAbsDiff: shape mismatch " +
                                ShapeStr(a.shape) + " vs " + ShapeStr(b.shape));
  }
  double m = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i) {
    m = std::max(m, std::abs(a.v[i] - b.v[i]));
  }
  return m;
}

}  // namespace tensor
}  // namespace mmasr
