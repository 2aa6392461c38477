#include "qla/contract.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace qla {

namespace {

std::size_t ipow(int d, int r) {
  std::size_t s = 1;
  for (int i = 0; i < r; ++i) s *= static_cast<std::size_t>(d);
  return s;
}

int log_dim(std::size_t size, int d) {
  int r = 0;
  std::size_t s = 1;
  while (s < size) {
    s *= static_cast<std::size_t>(d);
    ++r;
  }
  if (s != size) throw DimensionError("matrix side is not a power of the tensor extent");
  return r;
}

struct Operand {
  const Tensor* t = nullptr;
  std::string labels;
  std::vector<int> slots;  // label slot per axis
  std::vector<std::uint8_t> idx;  // nonzero index tuples, rank per entry
  std::vector<const Scalar*> val;
};

struct Step {
  int op = 0;
  std::vector<int> key_axes;  // axes whose label is bound before this step
  std::vector<int> new_axes;  // axes that bind (first occurrence in the whole plan)
  std::vector<std::pair<int, int>> repeat_axes;  // (axis, earlier axis in same operand)
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
};

class Engine {
 public:
  Engine(const std::string& pattern, const std::vector<const Tensor*>& ops) {
    const auto arrow = pattern.find("->");
    if (arrow == std::string::npos) throw Error("einsum pattern needs '->'");
    std::string lhs = pattern.substr(0, arrow), out = pattern.substr(arrow + 2);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : lhs) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    parts.push_back(cur);
    if (parts.size() != ops.size()) throw Error("einsum operand count does not match pattern");
    if (ops.empty()) throw Error("einsum needs at least one operand");
    dim_ = ops[0]->dim();
    for (std::size_t o = 0; o < ops.size(); ++o) {
      if (ops[o]->dim() != dim_) throw DimensionError("einsum operands must share one extent");
      if (static_cast<int>(parts[o].size()) != ops[o]->rank())
        throw DimensionError("einsum labels '" + parts[o] + "' do not match operand rank");
      Operand op;
      op.t = ops[o];
      op.labels = parts[o];
      for (char c : op.labels) op.slots.push_back(slot_of(c));
      const int r = ops[o]->rank();
      std::vector<int> ix(static_cast<std::size_t>(r));
      for (std::size_t f = 0; f < ops[o]->size(); ++f) {
        const Scalar& v = (*ops[o])[f];
        if (v.is_zero()) continue;
        std::size_t rem = f;
        for (int a = r - 1; a >= 0; --a) {
          ix[static_cast<std::size_t>(a)] = static_cast<int>(rem % static_cast<std::size_t>(dim_));
          rem /= static_cast<std::size_t>(dim_);
        }
        for (int a = 0; a < r; ++a) op.idx.push_back(static_cast<std::uint8_t>(ix[static_cast<std::size_t>(a)]));
        op.val.push_back(&v);
      }
      operands_.push_back(std::move(op));
    }
    for (char c : out) {
      auto it = std::find(names_.begin(), names_.end(), c);
      if (it == names_.end()) throw Error(std::string("einsum output label '") + c + "' is not an input label");
      int s = static_cast<int>(it - names_.begin());
      if (std::find(out_slots_.begin(), out_slots_.end(), s) != out_slots_.end())
        throw Error("einsum output labels must be distinct");
      out_slots_.push_back(s);
    }
    plan();
  }

  Tensor run() {
    Tensor result(dim_, static_cast<int>(out_slots_.size()));
    for (auto& op : operands_)
      if (op.val.empty()) return result;
    vals_.assign(names_.size(), 0);
    recurse(0, nullptr, result);
    return result;
  }

 private:
  int slot_of(char c) {
    auto it = std::find(names_.begin(), names_.end(), c);
    if (it != names_.end()) return static_cast<int>(it - names_.begin());
    names_.push_back(c);
    return static_cast<int>(names_.size()) - 1;
  }

  std::uint64_t key_of(const Operand& op, std::size_t e, const std::vector<int>& axes) const {
    std::uint64_t k = 0;
    const std::size_t r = op.labels.size();
    for (int a : axes) k = k * static_cast<std::uint64_t>(dim_) + op.idx[e * r + static_cast<std::size_t>(a)];
    return k;
  }

  void plan() {
    std::vector<bool> used(operands_.size(), false), bound(names_.size(), false);
    for (std::size_t s = 0; s < operands_.size(); ++s) {
      int best = -1;
      long best_score = 0;
      for (std::size_t o = 0; o < operands_.size(); ++o) {
        if (used[o]) continue;
        long nb = 0;
        for (int sl : operands_[o].slots) nb += bound[static_cast<std::size_t>(sl)] ? 1 : 0;
        long score = nb * 1000000L - static_cast<long>(operands_[o].val.size());
        if (best < 0 || score > best_score) {
          best = static_cast<int>(o);
          best_score = score;
        }
      }
      used[static_cast<std::size_t>(best)] = true;
      Step st;
      st.op = best;
      const Operand& op = operands_[static_cast<std::size_t>(best)];
      std::vector<int> first_axis(names_.size(), -1);
      for (int a = 0; a < static_cast<int>(op.slots.size()); ++a) {
        const auto sl = static_cast<std::size_t>(op.slots[static_cast<std::size_t>(a)]);
        if (first_axis[sl] >= 0) {
          st.repeat_axes.emplace_back(a, first_axis[sl]);
          continue;
        }
        first_axis[sl] = a;
        if (bound[sl]) st.key_axes.push_back(a);
        else st.new_axes.push_back(a);
      }
      for (int a : st.new_axes) bound[static_cast<std::size_t>(op.slots[static_cast<std::size_t>(a)])] = true;
      for (std::size_t e = 0; e < op.val.size(); ++e) {
        bool ok = true;
        const std::size_t r = op.labels.size();
        for (auto [a, b] : st.repeat_axes)
          if (op.idx[e * r + static_cast<std::size_t>(a)] != op.idx[e * r + static_cast<std::size_t>(b)]) ok = false;
        if (ok) st.buckets[key_of(op, e, st.key_axes)].push_back(static_cast<int>(e));
      }
      steps_.push_back(std::move(st));
    }
  }

  void recurse(std::size_t depth, const Scalar* prefix, Tensor& out) {
    if (depth == steps_.size()) {
      std::size_t flat = 0;
      for (int s : out_slots_) flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(vals_[static_cast<std::size_t>(s)]);
      out[flat] += *prefix;
      return;
    }
    const Step& st = steps_[depth];
    const Operand& op = operands_[static_cast<std::size_t>(st.op)];
    std::uint64_t key = 0;
    for (int a : st.key_axes) key = key * static_cast<std::uint64_t>(dim_) + static_cast<std::uint64_t>(vals_[static_cast<std::size_t>(op.slots[static_cast<std::size_t>(a)])]);
    auto it = st.buckets.find(key);
    if (it == st.buckets.end()) return;
    const std::size_t r = op.labels.size();
    for (int e : it->second) {
      for (int a : st.new_axes)
        vals_[static_cast<std::size_t>(op.slots[static_cast<std::size_t>(a)])] = op.idx[static_cast<std::size_t>(e) * r + static_cast<std::size_t>(a)];
      const Scalar& v = *op.val[static_cast<std::size_t>(e)];
      if (prefix == nullptr) {
        recurse(depth + 1, &v, out);
      } else {
        Scalar prod = *prefix * v;
        recurse(depth + 1, &prod, out);
      }
    }
  }

  int dim_ = 0;
  std::vector<char> names_;
  std::vector<Operand> operands_;
  std::vector<int> out_slots_;
  std::vector<Step> steps_;
  std::vector<int> vals_;
};

}  // namespace

Tensor::Tensor(int dim, int rank) : dim_(dim), rank_(rank), data_(ipow(dim, rank)) {
  if (dim < 1 || rank < 0) throw DimensionError("tensor needs extent >= 1 and rank >= 0");
}

Tensor Tensor::from(const Mat& m, int dim) {
  int a = log_dim(m.rows(), dim), b = log_dim(m.cols(), dim);
  Tensor t(dim, a + b);
  t.data_ = m.entries();
  return t;
}

std::size_t Tensor::flatten(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != rank_) throw DimensionError("tensor index rank mismatch");
  std::size_t f = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw DimensionError("tensor index out of range");
    f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return f;
}

Mat Tensor::as_mat(int row_rank) const {
  if (row_rank < 0 || row_rank > rank_) throw DimensionError("bad row rank");
  Mat m(ipow(dim_, row_rank), ipow(dim_, rank_ - row_rank));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = data_[i * m.cols() + j];
  return m;
}

BiMat Tensor::as_bimat(int n) const {
  const auto side = static_cast<std::size_t>(n * n);
  if (data_.size() != side * side) throw DimensionError("tensor does not reshape to a BiMat");
  Mat m(side, side);
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) m(i, j) = data_[i * side + j];
  return BiMat(n, std::move(m));
}

Tensor Tensor::reshaped(int dim) const {
  Tensor t(dim, log_dim(data_.size(), dim));
  t.data_ = data_;
  return t;
}

Tensor einsum(const std::string& pattern, const std::vector<const Tensor*>& operands) {
  return Engine(pattern, operands).run();
}

}  // namespace qla
