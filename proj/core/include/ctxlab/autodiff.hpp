#pragma once

#include <functional>
#include <vector>

#include "ctxlab/rng.hpp"

namespace ctxlab::ad {

// Dense row-major matrix of doubles. Vectors are 1xN or Nx1 matrices.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  double* row_ptr(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
  const double* row_ptr(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }
  std::size_t size() const { return a.size(); }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

  static Mat zeros(int r, int c) { return Mat(r, c); }
  static Mat full(int r, int c, double v);
  static Mat randn(int r, int c, double stddev, Rng& rng);
  static Mat from_vector(const std::vector<double>& v, bool column);
};

// C += A * B, C += A * B^T, C += A^T * B
void mm_acc(const Mat& A, const Mat& B, Mat& C);
void mm_abt_acc(const Mat& A, const Mat& B, Mat& C);
void mm_atb_acc(const Mat& A, const Mat& B, Mat& C);

class Tape;

// Lightweight handle to a tape node.
struct Var {
  Tape* tape = nullptr;
  int id = -1;
  bool valid() const { return tape != nullptr && id >= 0; }
};

// Reverse-mode tape. Nodes are created in topological order; backward()
// walks them in reverse. Tapes are single-threaded and not movable: build
// one per independent unit of work (e.g. per sequence in a batch).
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var leaf(Mat value);        // trainable input, receives gradient
  Var constant(Mat value);    // no gradient

  const Mat& val(Var v) const;
  const Mat& grad(Var v) const;  // valid after backward(); zeros if untouched

  // Seeds d(root)/d(root) = 1 and accumulates gradients into every
  // grad-requiring node. root must be 1x1.
  void backward(Var root);

  // ---- elementwise / shape ops ----
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var mul(Var a, Var b);
  Var scale(Var a, double c);
  Var add_scalar(Var a, Var s);        // s is 1x1, broadcast
  Var sub_const(Var a, const Mat& c);
  Var silu(Var a);
  Var log_ew(Var a);
  Var exp_ew(Var a);
  Var sum(Var a);                      // -> 1x1
  Var weighted_sum(Var a, Mat w);      // sum(a .* w) -> 1x1

  // ---- linear algebra ----
  Var matmul(Var a, Var b);
  Var row_gather(Var table, std::vector<int> idx);
  Var rmsnorm_rows(Var a, double eps);
  Var mul_rowvec(Var a, Var v);        // v is 1 x cols

  // ---- fused model ops ----

  // Causal multi-head attention with rotary embedding applied to q and k.
  // q, k, v are (len x d_model); theta is (1 x head_dim/2) and is shared by
  // all heads; positions are real-valued, one per row. Gradients flow into
  // q, k, v and theta.
  Var rope_attention(Var q, Var k, Var v, std::vector<double> positions,
                     Var theta, int n_heads);

  // Cross-entropy over rows of logits. targets[i] < 0 means "row ignored".
  // mean=true divides by the number of scored rows. Returns 1x1.
  Var cross_entropy_rows(Var logits, std::vector<int> targets, bool mean);

  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Mat val;
    Mat grad;
    bool requires_grad = false;
    std::function<void(Tape&)> back;  // null for leaves/constants
  };

  int push(Mat val, bool requires_grad, std::function<void(Tape&)> back);
  Node& node(int id) { return nodes_[static_cast<std::size_t>(id)]; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  Mat& grad_ref(int id) { return nodes_[static_cast<std::size_t>(id)].grad; }
  void check_same_tape(Var v) const;

  std::vector<Node> nodes_;
};

}  // namespace ctxlab::ad
