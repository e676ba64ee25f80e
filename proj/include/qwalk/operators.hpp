#ifndef QWALK_OPERATORS_HPP
#define QWALK_OPERATORS_HPP

#include "qwalk/types.hpp"

namespace qwalk {

enum class Axis { x, y, z };

const char* axis_name(Axis axis);
Axis parse_axis(const std::string& s);

Mat2 identity2();
Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();
Mat2 pauli(Axis axis);

/// Hadamard coin, (sigma_x + sigma_z)/sqrt(2).
Mat2 hadamard();

/// Discrete Fourier transform: entry (n, k) = exp(2*pi*i*n*k/N)/sqrt(N).
/// Column k is the momentum eigenstate |k> in the position basis.
CMat dft_matrix(int n);

/// Cyclic shift U: |n> -> |n+1 mod N| (position basis).
CMat cycle_shift(int n);

/// Reflection R: |n> -> |-n mod N> (position basis).
CMat reflection(int n);

/// Momentum shift V: |k> -> |k+1 mod N>; diagonal exp(2*pi*i*n/N) in the
/// position basis under this Fourier convention.
CMat momentum_shift(int n);

struct ShiftOperators {
  CMat u;
  CMat r;
  CMat v;
};

ShiftOperators shift_operators(int n);

/// Coin kick exp(-i*eps*sigma_axis) = cos(eps)*I - i*sin(eps)*sigma_axis.
Mat2 kick_unitary(Axis axis, double eps);

}  // namespace qwalk

#endif  // QWALK_OPERATORS_HPP
