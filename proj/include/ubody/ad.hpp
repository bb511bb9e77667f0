#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

namespace ubody::ad {

// Reverse-mode tape over scalars. Each recorded node has at most two parents;
// a backward sweep over the node array yields d(output)/d(input) for every
// input registered with Tape::input(). Values with index -1 are constants and
// never touch the tape, so mixed double/Var arithmetic stays cheap.
class Tape {
 public:
  struct Node {
    double p0, p1;      // local partials
    std::int32_t a0, a1;  // parent node indices, -1 if none
  };

  std::int32_t input(double) {
    nodes_.push_back({0.0, 0.0, -1, -1});
    return static_cast<std::int32_t>(nodes_.size()) - 1;
  }

  std::int32_t unary(std::int32_t a, double pa) {
    nodes_.push_back({pa, 0.0, a, -1});
    return static_cast<std::int32_t>(nodes_.size()) - 1;
  }

  std::int32_t binary(std::int32_t a, double pa, std::int32_t b, double pb) {
    nodes_.push_back({pa, pb, a, b});
    return static_cast<std::int32_t>(nodes_.size()) - 1;
  }

  std::size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }
  void reserve(std::size_t n) { nodes_.reserve(n); }

  // Adjoints of every node w.r.t. the node `output`. Callers read the entries
  // at their input indices.
  std::vector<double> gradient(std::int32_t output) const {
    std::vector<double> adj(nodes_.size(), 0.0);
    if (output < 0) return adj;
    adj[output] = 1.0;
    for (std::int32_t i = output; i >= 0; --i) {
      const double a = adj[i];
      if (a == 0.0) continue;
      const Node& n = nodes_[i];
      if (n.a0 >= 0) adj[n.a0] += a * n.p0;
      if (n.a1 >= 0) adj[n.a1] += a * n.p1;
    }
    return adj;
  }

 private:
  std::vector<Node> nodes_;
};

// Tracked scalar. Default-constructed or double-constructed Vars are
// constants; Vars created through Tape::make are differentiable inputs.
struct Var {
  double v = 0.0;
  std::int32_t i = -1;
  Tape* t = nullptr;

  Var() = default;
  Var(double value) : v(value) {}  // NOLINT: implicit constant lift
  Var(double value, std::int32_t idx, Tape* tape) : v(value), i(idx), t(tape) {}

  bool tracked() const { return i >= 0; }
};

inline Var make_input(Tape& tape, double value) { return Var(value, tape.input(value), &tape); }

inline double val(const Var& x) { return x.v; }
inline double val(double x) { return x; }

namespace detail {
inline Tape* tape_of(const Var& a, const Var& b) {
  assert(a.t == nullptr || b.t == nullptr || a.t == b.t);
  return a.t ? a.t : b.t;
}
}  // namespace detail

inline Var operator+(const Var& a, const Var& b) {
  Tape* t = detail::tape_of(a, b);
  if (!t) return Var(a.v + b.v);
  if (a.tracked() && b.tracked()) return Var(a.v + b.v, t->binary(a.i, 1.0, b.i, 1.0), t);
  if (a.tracked()) return Var(a.v + b.v, t->unary(a.i, 1.0), t);
  return Var(a.v + b.v, t->unary(b.i, 1.0), t);
}

inline Var operator-(const Var& a, const Var& b) {
  Tape* t = detail::tape_of(a, b);
  if (!t) return Var(a.v - b.v);
  if (a.tracked() && b.tracked()) return Var(a.v - b.v, t->binary(a.i, 1.0, b.i, -1.0), t);
  if (a.tracked()) return Var(a.v - b.v, t->unary(a.i, 1.0), t);
  return Var(a.v - b.v, t->unary(b.i, -1.0), t);
}

inline Var operator*(const Var& a, const Var& b) {
  Tape* t = detail::tape_of(a, b);
  if (!t) return Var(a.v * b.v);
  if (a.tracked() && b.tracked()) return Var(a.v * b.v, t->binary(a.i, b.v, b.i, a.v), t);
  if (a.tracked()) return Var(a.v * b.v, t->unary(a.i, b.v), t);
  return Var(a.v * b.v, t->unary(b.i, a.v), t);
}

inline Var operator/(const Var& a, const Var& b) {
  Tape* t = detail::tape_of(a, b);
  const double inv = 1.0 / b.v;
  if (!t) return Var(a.v * inv);
  if (a.tracked() && b.tracked())
    return Var(a.v * inv, t->binary(a.i, inv, b.i, -a.v * inv * inv), t);
  if (a.tracked()) return Var(a.v * inv, t->unary(a.i, inv), t);
  return Var(a.v * inv, t->unary(b.i, -a.v * inv * inv), t);
}

inline Var operator-(const Var& a) {
  if (!a.tracked()) return Var(-a.v);
  return Var(-a.v, a.t->unary(a.i, -1.0), a.t);
}

inline Var& operator+=(Var& a, const Var& b) { a = a + b; return a; }
inline Var& operator-=(Var& a, const Var& b) { a = a - b; return a; }
inline Var& operator*=(Var& a, const Var& b) { a = a * b; return a; }

inline Var sqrt(const Var& a) {
  const double s = std::sqrt(a.v);
  if (!a.tracked()) return Var(s);
  return Var(s, a.t->unary(a.i, 0.5 / s), a.t);
}

inline Var exp(const Var& a) {
  const double e = std::exp(a.v);
  if (!a.tracked()) return Var(e);
  return Var(e, a.t->unary(a.i, e), a.t);
}

inline Var log(const Var& a) {
  const double l = std::log(a.v);
  if (!a.tracked()) return Var(l);
  return Var(l, a.t->unary(a.i, 1.0 / a.v), a.t);
}

inline Var sin(const Var& a) {
  if (!a.tracked()) return Var(std::sin(a.v));
  return Var(std::sin(a.v), a.t->unary(a.i, std::cos(a.v)), a.t);
}

inline Var cos(const Var& a) {
  if (!a.tracked()) return Var(std::cos(a.v));
  return Var(std::cos(a.v), a.t->unary(a.i, -std::sin(a.v)), a.t);
}

inline Var abs(const Var& a) {
  if (!a.tracked()) return Var(std::abs(a.v));
  const double sign = a.v >= 0.0 ? 1.0 : -1.0;
  return Var(std::abs(a.v), a.t->unary(a.i, sign), a.t);
}

// max against a constant threshold: exact zero gradient on the plateau.
inline Var max(const Var& a, double threshold) {
  if (a.v > threshold) return a;
  return Var(threshold);
}

inline Var max(const Var& a, const Var& b) { return a.v >= b.v ? a : b; }
inline Var min(const Var& a, const Var& b) { return a.v <= b.v ? a : b; }

inline bool operator<(const Var& a, const Var& b) { return a.v < b.v; }
inline bool operator>(const Var& a, const Var& b) { return a.v > b.v; }

}  // namespace ubody::ad
