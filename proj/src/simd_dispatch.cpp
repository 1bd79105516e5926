#include <cstdlib>
#include <stdexcept>
#include <string>

#include "feedback/simd.hpp"

namespace feedback::simd {

#if FEEDBACK_BUILD_AVX2
const KernelTable<float>& avx2_table_f32();
const KernelTable<double>& avx2_table_f64();
#endif
#if FEEDBACK_BUILD_NEON
const KernelTable<float>& neon_table_f32();
const KernelTable<double>& neon_table_f64();
#endif

namespace {

struct Dispatch {
  Backend backend;
  const KernelTable<float>* f32;
  const KernelTable<double>* f64;
};

bool cpu_has_avx2() {
#if FEEDBACK_BUILD_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Dispatch make(Backend b) {
  switch (b) {
#if FEEDBACK_BUILD_AVX2
    case Backend::Avx2:
      return {Backend::Avx2, &avx2_table_f32(), &avx2_table_f64()};
#endif
#if FEEDBACK_BUILD_NEON
    case Backend::Neon:
      return {Backend::Neon, &neon_table_f32(), &neon_table_f64()};
#endif
    default:
      return {Backend::Scalar, &scalar_table_f32(), &scalar_table_f64()};
  }
}

Backend default_backend() {
  if (const char* env = std::getenv("FEEDBACK_SIMD")) {
    std::string v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && supported(Backend::Avx2)) return Backend::Avx2;
    if (v == "neon" && supported(Backend::Neon)) return Backend::Neon;
    // unknown or unsupported value: fall through to auto-detection
  }
  if (supported(Backend::Avx2)) return Backend::Avx2;
  if (supported(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

Dispatch& dispatch() {
  static Dispatch d = make(default_backend());
  return d;
}

}  // namespace

const char* name(Backend b) {
  switch (b) {
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    default: return "scalar";
  }
}

bool supported(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return cpu_has_avx2();
    case Backend::Neon:
#if FEEDBACK_BUILD_NEON
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active() { return dispatch().backend; }

void force(Backend b) {
  if (!supported(b))
    throw std::invalid_argument(std::string("simd backend not supported here: ") + name(b));
  dispatch() = make(b);
}

namespace detail {
template <>
const KernelTable<float>& table<float>() {
  return *dispatch().f32;
}
template <>
const KernelTable<double>& table<double>() {
  return *dispatch().f64;
}
}  // namespace detail

}  // namespace feedback::simd
