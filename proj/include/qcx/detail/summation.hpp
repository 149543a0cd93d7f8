#pragma once

#include <cmath>
#include <complex>

namespace qcx::detail {

// Neumaier compensated sum. Order of additions is fixed by the caller, so
// results are reproducible run to run.
template <typename T>
class CompensatedSum {
public:
  void add(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  T value() const { return sum_ + comp_; }

private:
  T sum_{};
  T comp_{};
};

template <typename T>
class CompensatedSum<std::complex<T>> {
public:
  void add(std::complex<T> x) {
    re_.add(x.real());
    im_.add(x.imag());
  }

  std::complex<T> value() const { return {re_.value(), im_.value()}; }

private:
  CompensatedSum<T> re_;
  CompensatedSum<T> im_;
};

} // namespace qcx::detail
