#include "qwalk/operators.hpp"

#include <cmath>
#include <string>

namespace qwalk {

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::x:
      return "x";
    case Axis::y:
      return "y";
    case Axis::z:
      return "z";
  }
  return "?";
}

Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  if (s == "z") return Axis::z;
  throw std::invalid_argument("unknown kick axis: " + s);
}

Mat2 identity2() { return Mat2::Identity(); }

Mat2 sigma_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 sigma_y() {
  Mat2 m;
  m << 0, -IM, IM, 0;
  return m;
}

Mat2 sigma_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 pauli(Axis axis) {
  switch (axis) {
    case Axis::x:
      return sigma_x();
    case Axis::y:
      return sigma_y();
    case Axis::z:
      return sigma_z();
  }
  throw std::invalid_argument("bad axis");
}

Mat2 hadamard() {
  Mat2 m;
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

CMat dft_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dft_matrix: N must be >= 1");
  CMat f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k < n; ++k) {
      // n*k can exceed int range for large N; reduce the phase index mod N.
      const long long phase_index = (static_cast<long long>(row) * k) % n;
      f(row, k) = std::polar(scale, 2.0 * M_PI * phase_index / n);
    }
  }
  return f;
}

CMat cycle_shift(int n) {
  if (n < 2) throw std::invalid_argument("cycle_shift: N must be >= 2");
  CMat u = CMat::Zero(n, n);
  for (int col = 0; col < n; ++col) {
    u((col + 1) % n, col) = 1.0;
  }
  return u;
}

CMat reflection(int n) {
  if (n < 2) throw std::invalid_argument("reflection: N must be >= 2");
  CMat r = CMat::Zero(n, n);
  for (int col = 0; col < n; ++col) {
    r((n - col) % n, col) = 1.0;
  }
  return r;
}

CMat momentum_shift(int n) {
  if (n < 2) throw std::invalid_argument("momentum_shift: N must be >= 2");
  CMat v = CMat::Zero(n, n);
  for (int site = 0; site < n; ++site) {
    v(site, site) = std::polar(1.0, 2.0 * M_PI * site / n);
  }
  return v;
}

ShiftOperators shift_operators(int n) {
  return ShiftOperators{cycle_shift(n), reflection(n), momentum_shift(n)};
}

Mat2 kick_unitary(Axis axis, double eps) {
  if (!std::isfinite(eps)) {
    throw std::invalid_argument("kick_unitary: eps must be finite");
  }
  return std::cos(eps) * Mat2::Identity() - IM * std::sin(eps) * pauli(axis);
}

}  // namespace qwalk
