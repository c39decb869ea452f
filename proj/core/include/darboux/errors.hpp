#pragma once

#include <stdexcept>
#include <string>

namespace darboux {

/// Mismatched or malformed matrix/argument shapes.
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A seed supplies fewer derivatives than the operation needs.
class arity_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Scaled denominator determinant below the singularity floor.
class singularity_error : public std::runtime_error {
public:
    explicit singularity_error(const std::string& what)
        : std::runtime_error(what) {}
    singularity_error(const std::string& what, double x, double t)
        : std::runtime_error(what + " at (x=" + std::to_string(x) +
                             ", t=" + std::to_string(t) + ")"),
          x_(x), t_(t), has_point_(true) {}
    bool has_point() const { return has_point_; }
    double x() const { return x_; }
    double t() const { return t_; }

private:
    double x_ = 0, t_ = 0;
    bool has_point_ = false;
};

/// Evaluation would leave (or has left) the range of double.
class numeric_range_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A seed function or Wronskian vanishes (or changes sign) where it must not.
class node_error : public std::runtime_error {
public:
    node_error(const std::string& what, double x)
        : std::runtime_error(what + " at x=" + std::to_string(x)), x_(x) {}
    double x() const { return x_; }

private:
    double x_;
};

/// An integration window fails its decay precondition.
class window_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace darboux
