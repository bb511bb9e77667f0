#pragma once

#include <stdexcept>
#include <string>

namespace ubody {

inline constexpr const char* kVersion = "0.1.0";

// A point projects to (or behind) the camera plane.
class BehindCameraError : public std::runtime_error {
 public:
  explicit BehindCameraError(double depth)
      : std::runtime_error("point is behind the camera (depth=" + std::to_string(depth) + ")"),
        depth_(depth) {}
  double depth() const { return depth_; }

 private:
  double depth_;
};

// Triangle area below the usable threshold.
class DegenerateTriangleError : public std::runtime_error {
 public:
  explicit DegenerateTriangleError(const std::string& what) : std::runtime_error(what) {}
};

// An optimizer produced a non-finite loss.
class OptimizationFailure : public std::runtime_error {
 public:
  OptimizationFailure(const std::string& what, int iteration)
      : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
        iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

}  // namespace ubody
