#pragma once

#include <array>
#include <cmath>

#include "ubody/ad.hpp"

// Small fixed-size vector/matrix/quaternion math templated on the scalar, so
// the same formulas run on plain doubles and on tape-tracked ad::Var values.
// Matrices are row-major.
namespace ubody {

using ad::val;

template <class T>
struct Vec2T {
  T x{}, y{};
};

template <class T>
struct Vec3T {
  T x{}, y{}, z{};

  Vec3T() = default;
  Vec3T(T xx, T yy, T zz) : x(xx), y(yy), z(zz) {}
};

template <class T>
struct Mat3T {
  // m[r*3+c]
  std::array<T, 9> m{};

  static Mat3T identity() {
    Mat3T r;
    r.m = {T(1), T(0), T(0), T(0), T(1), T(0), T(0), T(0), T(1)};
    return r;
  }
  T& operator()(int r, int c) { return m[r * 3 + c]; }
  const T& operator()(int r, int c) const { return m[r * 3 + c]; }
};

template <class T>
struct QuatT {
  T w{}, x{}, y{}, z{};

  QuatT() : w(T(1)), x(T(0)), y(T(0)), z(T(0)) {}
  QuatT(T ww, T xx, T yy, T zz) : w(ww), x(xx), y(yy), z(zz) {}
};

// ---- vectors ----

template <class T>
Vec3T<T> operator+(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

template <class T>
Vec3T<T> operator-(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

template <class T>
Vec3T<T> operator*(const T& s, const Vec3T<T>& v) {
  return {s * v.x, s * v.y, s * v.z};
}

template <class T>
Vec3T<T> scale3(double s, const Vec3T<T>& v) {
  return {T(s) * v.x, T(s) * v.y, T(s) * v.z};
}

template <class T>
T dot(const Vec3T<T>& a, const Vec3T<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
Vec3T<T> cross(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class T>
T squared_norm(const Vec3T<T>& a) {
  return dot(a, a);
}

template <class T>
T norm(const Vec3T<T>& a) {
  using std::sqrt;
  using ad::sqrt;
  return sqrt(dot(a, a));
}

// ---- matrices ----

template <class T>
Vec3T<T> operator*(const Mat3T<T>& m, const Vec3T<T>& v) {
  return {m.m[0] * v.x + m.m[1] * v.y + m.m[2] * v.z,
          m.m[3] * v.x + m.m[4] * v.y + m.m[5] * v.z,
          m.m[6] * v.x + m.m[7] * v.y + m.m[8] * v.z};
}

template <class T>
Mat3T<T> operator*(const Mat3T<T>& a, const Mat3T<T>& b) {
  Mat3T<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[i * 3 + j] =
          a.m[i * 3] * b.m[j] + a.m[i * 3 + 1] * b.m[3 + j] + a.m[i * 3 + 2] * b.m[6 + j];
  return r;
}

template <class T>
Mat3T<T> operator+(const Mat3T<T>& a, const Mat3T<T>& b) {
  Mat3T<T> r;
  for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

template <class T>
Mat3T<T> operator-(const Mat3T<T>& a, const Mat3T<T>& b) {
  Mat3T<T> r;
  for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

template <class T>
Mat3T<T> transpose(const Mat3T<T>& a) {
  Mat3T<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i * 3 + j] = a.m[j * 3 + i];
  return r;
}

template <class T>
Mat3T<T> scale_mat(const T& s, const Mat3T<T>& a) {
  Mat3T<T> r;
  for (int i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
  return r;
}

// ---- rotations ----

// Rodrigues on the raw axis-angle vector: R = I + a [v]x + b [v]x^2 with
// a = sin|v|/|v|, b = (1-cos|v|)/|v|^2. The series branch keeps value and
// derivative finite through |v| = 0 and returns the exact identity there.
template <class T>
Mat3T<T> rodrigues(const Vec3T<T>& v) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  using ad::cos;
  using ad::sin;
  using ad::sqrt;

  const T t2 = squared_norm(v);
  T a, b;
  if (val(t2) < 1e-16) {
    a = T(1.0) - t2 * T(1.0 / 6.0);
    b = T(0.5) - t2 * T(1.0 / 24.0);
  } else {
    const T theta = sqrt(t2);
    a = sin(theta) / theta;
    b = (T(1.0) - cos(theta)) / t2;
  }

  Mat3T<T> r;
  const T vxx = v.x * v.x, vyy = v.y * v.y, vzz = v.z * v.z;
  const T vxy = v.x * v.y, vxz = v.x * v.z, vyz = v.y * v.z;
  r.m[0] = T(1.0) - b * (vyy + vzz);
  r.m[1] = b * vxy - a * v.z;
  r.m[2] = b * vxz + a * v.y;
  r.m[3] = b * vxy + a * v.z;
  r.m[4] = T(1.0) - b * (vxx + vzz);
  r.m[5] = b * vyz - a * v.x;
  r.m[6] = b * vxz - a * v.y;
  r.m[7] = b * vyz + a * v.x;
  r.m[8] = T(1.0) - b * (vxx + vyy);
  return r;
}

template <class T>
QuatT<T> quat_mul(const QuatT<T>& a, const QuatT<T>& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

template <class T>
QuatT<T> quat_normalized(const QuatT<T>& q) {
  using std::sqrt;
  using ad::sqrt;
  const T n = sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
  const T inv = T(1.0) / n;
  return {q.w * inv, q.x * inv, q.y * inv, q.z * inv};
}

template <class T>
Mat3T<T> quat_to_matrix(const QuatT<T>& q) {
  const T xx = q.x * q.x, yy = q.y * q.y, zz = q.z * q.z;
  const T xy = q.x * q.y, xz = q.x * q.z, yz = q.y * q.z;
  const T wx = q.w * q.x, wy = q.w * q.y, wz = q.w * q.z;
  Mat3T<T> r;
  r.m[0] = T(1.0) - T(2.0) * (yy + zz);
  r.m[1] = T(2.0) * (xy - wz);
  r.m[2] = T(2.0) * (xz + wy);
  r.m[3] = T(2.0) * (xy + wz);
  r.m[4] = T(1.0) - T(2.0) * (xx + zz);
  r.m[5] = T(2.0) * (yz - wx);
  r.m[6] = T(2.0) * (xz - wy);
  r.m[7] = T(2.0) * (yz + wx);
  r.m[8] = T(1.0) - T(2.0) * (xx + yy);
  return r;
}

// Shepperd's method; double-only (branch structure is not AD-friendly and the
// differentiable paths never need matrix -> quaternion).
inline QuatT<double> matrix_to_quat(const Mat3T<double>& m) {
  QuatT<double> q;
  const double tr = m.m[0] + m.m[4] + m.m[8];
  if (tr > 0.0) {
    double s = std::sqrt(tr + 1.0) * 2.0;
    q.w = 0.25 * s;
    q.x = (m.m[7] - m.m[5]) / s;
    q.y = (m.m[2] - m.m[6]) / s;
    q.z = (m.m[3] - m.m[1]) / s;
  } else if (m.m[0] > m.m[4] && m.m[0] > m.m[8]) {
    double s = std::sqrt(1.0 + m.m[0] - m.m[4] - m.m[8]) * 2.0;
    q.w = (m.m[7] - m.m[5]) / s;
    q.x = 0.25 * s;
    q.y = (m.m[1] + m.m[3]) / s;
    q.z = (m.m[2] + m.m[6]) / s;
  } else if (m.m[4] > m.m[8]) {
    double s = std::sqrt(1.0 + m.m[4] - m.m[0] - m.m[8]) * 2.0;
    q.w = (m.m[2] - m.m[6]) / s;
    q.x = (m.m[1] + m.m[3]) / s;
    q.y = 0.25 * s;
    q.z = (m.m[5] + m.m[7]) / s;
  } else {
    double s = std::sqrt(1.0 + m.m[8] - m.m[0] - m.m[4]) * 2.0;
    q.w = (m.m[3] - m.m[1]) / s;
    q.x = (m.m[2] + m.m[6]) / s;
    q.y = (m.m[5] + m.m[7]) / s;
    q.z = 0.25 * s;
  }
  return quat_normalized(q);
}

}  // namespace ubody
