// mmasr/tape.h

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

#ifndef MMASR_TAPE_H_
#define MMASR_TAPE_H_

#include <functional>
#include <string>
#include <vector>

#include "mmasr/tensor.h"

namespace mmasr {
namespace tensor {

// Reverse-mode automatic differentiation over a per-forward-pass tape.
// A tape is single-threaded: built, evaluated and differentiated by one
// execution context, then discarded.

enum class OpKind {
  kLeaf,
  kAdd,
  kAddN,
  kSub,
  kMul,
  kMulConst,
  kScale,
  kOneMinus,
  kMatmul,
  kTranspose,
  kTanh,
  kSigmoid,
  kLog,
  kSoftmax,
  kLogSoftmax,
  kPick,
  kMean,
  kSum,
  kConcat,
  kSlice,
  kReshape,
  kAddRowVec,
};

class Tape;

// Lightweight handle to a tape node. Copyable; valid while the tape lives.
class Var {
 public:
  Var() : tape_(nullptr), id_(-1) {}
  Var(Tape* tape, int id) : tape_(tape), id_(id) {}

  const Tensor& value() const;
  const Tensor& grad() const;
  Tape* tape() const { return tape_; }
  int id() const { return id_; }
  bool valid() const { return tape_ != nullptr; }

 private:
  Tape* tape_;
  int id_;
};

struct TapeNode {
  OpKind op = OpKind::kLeaf;
  std::vector<int> parents;
  Tensor value;
  Tensor grad;  // allocated lazily at backward time, same shape as value
  bool requires_grad = false;
  // Accumulates parent gradients from this node's grad. Null for leaves.
  std::function<void(Tape&, int)> backprop;
};

class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var Leaf(Tensor value, bool requires_grad);
  Var Constant(Tensor value) { return Leaf(std::move(value), false); }

  // Runs reverse accumulation from `loss` (must be scalar-shaped, numel 1).
  // Gradients of all requires_grad nodes are available afterwards; nodes not
  // on the path from loss keep zero gradients.
  void Backward(Var loss);

  TapeNode& node(int id) { return nodes_[id]; }
  const TapeNode& node(int id) const { return nodes_[id]; }
  size_t size() const { return nodes_.size(); }

  // Internal: appends a computed node. Used by the op builders.
  Var Emit(OpKind op, Tensor value, std::vector<int> parents,
           std::function<void(Tape&, int)> backprop);

 private:
  std::vector<TapeNode> nodes_;
};

// ---- Differentiable operations -------------------------------------------
// All ops validate shapes and throw std::invalid_argument naming both shapes
// on mismatch. Elementwise ops require identical shapes.

Var Add(Var a, Var b);
Var AddN(const std::vector<Var>& xs);  // n-ary same-shape sum
Var Sub(Var a, Var b);
Var Mul(Var a, Var b);                  // elementwise
Var MulConst(Var a, const Tensor& c);   // elementwise by a constant tensor
Var Scale(Var a, double c);
Var OneMinus(Var a);                    // 1 - x elementwise

// (m x k)·(k x n) -> m x n, or (m x k)·(k) -> (m).
Var Matmul(Var a, Var b);
Var Transpose(Var a);  // rank-2 only
Var AddRowVec(Var m, Var v);  // m: N x D, v: D; adds v to every row

Var TanhElem(Var x);
Var SigmoidElem(Var x);
// Natural log with the inputs floored at 1e-10 (silence features would
// otherwise produce -inf); the gradient uses the floored input.
Var LogElem(Var x);

Var Softmax(Var x);      // rank-1; max-subtracted for stability
Var LogSoftmax(Var x);   // rank-1
Var Pick(Var x, int i);  // rank-1 -> scalar {1}

Var MeanAll(Var x);  // -> scalar {1}
Var SumAll(Var x);   // -> scalar {1}

Var Concat(const std::vector<Var>& xs, int axis);
Var Slice(Var x, int axis, int start, int len);
Var RowVec(Var m, int row);  // rank-2 -> rank-1 row
Var Reshape(Var x, std::vector<int> shape);

// ---- Gradient checking ----------------------------------------------------

// A scalar function expressed as a tape program over one Var per parameter.
using TapeFn =
    std::function<Var(Tape&, const std::vector<Var>&)>;

struct GradCheckResult {
  double max_rel_error = 0.0;
  // Entry and parameter index where the max occurred, for diagnostics.
  int worst_param = -1;
  long worst_entry = -1;
};

// Analytic gradients of fn at params via one forward + backward.
std::vector<Tensor> AnalyticGradients(const TapeFn& fn,
                                      const std::vector<Tensor>& params);

// Central differences (f(t+eps) - f(t-eps)) / (2 eps) per parameter entry.
std::vector<Tensor> NumericGradients(const TapeFn& fn,
                                     const std::vector<Tensor>& params,
                                     double eps);

// Max over entries of |a-b| / max(|a|, |b|, 1e-8).
GradCheckResult MaxRelError(const std::vector<Tensor>& analytic,
                            const std::vector<Tensor>& numeric);

// Compares backward() gradients against central differences. eps must be in
// (0, 1e-2]. fn must be deterministic (dropout disabled); this is verified by
// evaluating the base point twice and comparing bitwise.
GradCheckResult GradCheck(const TapeFn& fn, const std::vector<Tensor>& params,
                          double eps);

}  // namespace tensor
}  // namespace mmasr

#endif  // MMASR_TAPE_H_
