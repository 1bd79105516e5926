#include <algorithm>
#include <cstddef>

#include "feedback/simd.hpp"

namespace feedback::simd {

namespace {

template <typename T>
T dot_scalar(const T* a, const T* b, std::size_t n) {
  T acc = T(0);
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

template <typename T>
void axpy_scalar(T alpha, const T* x, T* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

template <typename T>
void scale_scalar(T* x, std::size_t n, T alpha) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

template <typename T>
void add_scalar(const T* a, const T* b, T* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

template <typename T>
void mul_scalar(const T* a, const T* b, T* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

template <typename T>
void max_acc_scalar(const T* x, T* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::max(acc[i], x[i]);
}

template <typename T>
void relu_scalar(const T* x, T* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] > T(0) ? x[i] : T(0);
}

template <typename T>
KernelTable<T> make_scalar_table() {
  return KernelTable<T>{dot_scalar<T>, axpy_scalar<T>,    scale_scalar<T>,
                        add_scalar<T>, mul_scalar<T>,     max_acc_scalar<T>,
                        relu_scalar<T>};
}

}  // namespace

const KernelTable<float>& scalar_table_f32() {
  static const KernelTable<float> t = make_scalar_table<float>();
  return t;
}

const KernelTable<double>& scalar_table_f64() {
  static const KernelTable<double> t = make_scalar_table<double>();
  return t;
}

}  // namespace feedback::simd
