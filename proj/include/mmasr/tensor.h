// mmasr/tensor.h

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

#ifndef MMASR_TENSOR_H_
#define MMASR_TENSOR_H_

#include <string>
#include <vector>

namespace mmasr {
namespace tensor {

// Dense row-major tensor of 64-bit reals, rank <= 3. Tensors without an
// attached tape are plain immutable-by-convention values and safe to share
// read-only across threads.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> v;

  Tensor() = default;
  Tensor(std::vector<int> s, std::vector<double> values);

  static Tensor Zeros(std::vector<int> shape);
  static Tensor Full(std::vector<int> shape, double value);
  static Tensor Scalar(double value) { return Tensor({1}, {value}); }
  static Tensor Vec(std::vector<double> values);
  // Row-major matrix from nested initializer data.
  static Tensor Mat(int rows, int cols, std::vector<double> values);
  static Tensor Identity(int n);

  int rank() const { return static_cast<int>(shape.size()); }
  long numel() const { return static_cast<long>(v.size()); }
  int dim(int axis) const { return shape[axis]; }
  int rows() const { return shape[0]; }
  int cols() const { return shape[1]; }

  double& at(int i) { return v[i]; }
  double at(int i) const { return v[i]; }
  double& at(int i, int j) { return v[static_cast<long>(i) * shape[1] + j]; }
  double at(int i, int j) const {
    return v[static_cast<long>(i) * shape[1] + j];
  }
  double& at(int i, int j, int k) {
    return v[(static_cast<long>(i) * shape[1] + j) * shape[2] + k];
  }
  double at(int i, int j, int k) const {
    return v[(static_cast<long>(i) * shape[1] + j) * shape[2] + k];
  }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }
  bool all_finite() const;
};

std::string ShapeStr(const std::vector<int>& shape);

long NumelOf(const std::vector<int>& shape);

// Throws std::invalid_argument naming `where` if any entry is NaN/Inf.
void CheckFinite(const Tensor& t, const std::string& where);

// Max |a-b| over entries; shapes must match.
double MaxAbsDiff(const Tensor& a, const Tensor& b);

}  // namespace tensor
}  // namespace mmasr

#endif  // MMASR_TENSOR_H_
