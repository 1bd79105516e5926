#pragma once

#include <cstddef>
#include <string>

// Data-parallel kernels behind the tensor ops and the word2vec trainer.
// Scalar reference implementations always exist; an AVX2 (x86) or NEON
// (aarch64) variant is selected at runtime when the CPU supports it.
// The environment variable FEEDBACK_SIMD=scalar|avx2|neon overrides the
// automatic choice at process start.

namespace feedback::simd {

enum class Backend { Scalar, Avx2, Neon };

const char* name(Backend b);
bool supported(Backend b);
Backend active();
// Throws std::invalid_argument if the backend is not supported on this
// machine/build. Intended for tests and benchmarking.
void force(Backend b);

template <typename T>
struct KernelTable {
  T (*dot)(const T*, const T*, std::size_t);
  void (*axpy)(T, const T*, T*, std::size_t);        // y += alpha * x
  void (*scale)(T*, std::size_t, T);                 // x *= alpha
  void (*add)(const T*, const T*, T*, std::size_t);  // out = a + b
  void (*mul)(const T*, const T*, T*, std::size_t);  // out = a * b
  void (*max_acc)(const T*, T*, std::size_t);        // acc = max(acc, x)
  void (*relu)(const T*, T*, std::size_t);           // out = max(x, 0)
};

namespace detail {
template <typename T>
const KernelTable<T>& table();
template <>
const KernelTable<float>& table<float>();
template <>
const KernelTable<double>& table<double>();
}  // namespace detail

template <typename T>
inline T dot(const T* a, const T* b, std::size_t n) {
  return detail::table<T>().dot(a, b, n);
}
template <typename T>
inline void axpy(T alpha, const T* x, T* y, std::size_t n) {
  detail::table<T>().axpy(alpha, x, y, n);
}
template <typename T>
inline void scale(T* x, std::size_t n, T alpha) {
  detail::table<T>().scale(x, n, alpha);
}
template <typename T>
inline void add(const T* a, const T* b, T* out, std::size_t n) {
  detail::table<T>().add(a, b, out, n);
}
template <typename T>
inline void mul(const T* a, const T* b, T* out, std::size_t n) {
  detail::table<T>().mul(a, b, out, n);
}
template <typename T>
inline void max_acc(const T* x, T* acc, std::size_t n) {
  detail::table<T>().max_acc(x, acc, n);
}
template <typename T>
inline void relu(const T* x, T* out, std::size_t n) {
  detail::table<T>().relu(x, out, n);
}

// Reference tables, exposed so equivalence tests can compare any active
// backend against the scalar kernels without flipping global state.
const KernelTable<float>& scalar_table_f32();
const KernelTable<double>& scalar_table_f64();

}  // namespace feedback::simd
