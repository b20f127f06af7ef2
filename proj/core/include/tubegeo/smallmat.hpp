#pragma once

#include <vector>

namespace tubegeo {

// Minimal dense containers generic over the scalar type. Metric, chart and
// parametrization functors are written against these so that the same code
// runs on double and on nested duals; all double-precision linear algebra
// goes through Eigen instead.
template <class S>
class Vec {
 public:
  Vec() = default;
  explicit Vec(int n) : d_(static_cast<std::size_t>(n)) {}
  int size() const { return static_cast<int>(d_.size()); }
  S& operator[](int i) { return d_[static_cast<std::size_t>(i)]; }
  const S& operator[](int i) const { return d_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<S> d_;
};

template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<std::size_t>(rows * cols)) {}
  int rows() const { return r_; }
  int cols() const { return c_; }
  S& operator()(int i, int j) { return d_[static_cast<std::size_t>(i * c_ + j)]; }
  const S& operator()(int i, int j) const { return d_[static_cast<std::size_t>(i * c_ + j)]; }

  void set_zero() {
    for (auto& v : d_) v = S(0.0);
  }
  void set_identity_scaled(const S& s) {
    set_zero();
    for (int i = 0; i < r_ && i < c_; ++i) (*this)(i, i) = s;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<S> d_;
};

}  // namespace tubegeo
