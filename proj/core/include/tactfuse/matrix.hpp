#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace tactfuse {

// Dense row-major matrix of doubles; the single coefficient container used
// throughout the pipeline. Images, wavelet subbands, saliency maps and weight
// maps are all Matrix values with different nominal ranges.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows),
        cols_(cols),
        v_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
           fill) {
    assert(rows >= 0 && cols >= 0);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }

  double& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return v_[static_cast<std::size_t>(r) * cols_ + c];
  }
  double operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return v_[static_cast<std::size_t>(r) * cols_ + c];
  }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }

  bool same_size(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && v_ == other.v_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> v_;
};

// Row-literal constructor, mostly for tests and small fixtures.
inline Matrix matrix_from(
    std::initializer_list<std::initializer_list<double>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  Matrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    assert(static_cast<int>(row.size()) == c);
    int j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace tactfuse
