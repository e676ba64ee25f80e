#ifndef QWALK_TYPES_HPP
#define QWALK_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#ifdef QWALK_HAS_OPENMP
#include <omp.h>
#endif

namespace qwalk {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;

// Structural identities (unitarity, algebra relations) hold to this
// absolute tolerance; density-matrix validity checks use the looser one.
constexpr double STRUCTURAL_TOL = 1e-12;
constexpr double DENSITY_TOL = 1e-9;

constexpr cd IM{0.0, 1.0};

/// Largest entrywise absolute difference between two matrices.
inline double max_abs_diff(const CMat& a, const CMat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline int positive_mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

/// Serial or OpenMP execution of a data-parallel kernel. Every parallel
/// kernel in the library writes disjoint output slots (or reduces in a
/// fixed block order), so both paths produce identical bytes.
enum class Exec { serial, parallel };

/// Worker cap: min(hardware, QWALK_MAX_THREADS if set).
inline int worker_count() {
#ifdef QWALK_HAS_OPENMP
  static const int cached = [] {
    int cap = omp_get_max_threads();
    if (const char* env = std::getenv("QWALK_MAX_THREADS")) {
      const int requested = std::atoi(env);
      if (requested >= 1 && requested < cap) cap = requested;
    }
    return cap < 1 ? 1 : cap;
  }();
  return cached;
#else
  return 1;
#endif
}

template <class Body>
void for_range(Exec exec, std::int64_t count, Body&& body) {
#ifdef QWALK_HAS_OPENMP
  if (exec == Exec::parallel && count > 1) {
    const int workers = worker_count();
#pragma omp parallel for schedule(static) num_threads(workers)
    for (std::int64_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    body(i);
  }
}

/// SplitMix64 step; used to derive independent per-trajectory seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// z^e for integer e >= 0 by binary powering.
inline cd cpow_int(cd z, long e) {
  cd result{1.0, 0.0};
  while (e > 0) {
    if (e & 1) result *= z;
    z *= z;
    e >>= 1;
  }
  return result;
}

/// lambda^t for |lambda| = 1, evaluated through the polar angle so the
/// modulus never drifts.
inline cd unit_pow(cd lambda, long t) {
  return std::polar(1.0, std::arg(lambda) * static_cast<double>(t));
}

}  // namespace qwalk

#endif  // QWALK_TYPES_HPP
