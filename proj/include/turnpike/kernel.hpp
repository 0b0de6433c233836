#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>

#include "turnpike/errors.hpp"

namespace turnpike {

enum class KernelType { Quadratic, Absolute, Zero };

// Pairwise interaction weight P(x, y). The provided variants are symmetric,
// vanish at x = y, and depend on their arguments only through x - y:
//   Quadratic  P(x, y) = ||x - y||^2
//   Absolute   P(x, y) = ||x - y||
//   Zero       P(x, y) = 0
// Absolute has no classical derivative at coincident points and is flagged
// non-differentiable; adjoint-based code must refuse it.
struct InteractionKernel {
  KernelType type = KernelType::Quadratic;

  bool differentiable() const { return type != KernelType::Absolute; }

  template <class Derived>
  double from_difference(const Eigen::MatrixBase<Derived>& diff) const {
    switch (type) {
      case KernelType::Quadratic:
        return diff.squaredNorm();
      case KernelType::Absolute:
        return diff.norm();
      case KernelType::Zero:
        return 0.0;
    }
    return 0.0;
  }

  template <class A, class B>
  double value(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) const {
    return from_difference(x - y);
  }

  // Derivative of P with respect to the squared distance s = ||x - y||^2,
  // writing P = phi(s). Constant for the differentiable variants:
  // grad_x P = 2 phi'(s) (x - y), grad_y P = -2 phi'(s) (x - y).
  double phi_prime() const {
    switch (type) {
      case KernelType::Quadratic:
        return 1.0;
      case KernelType::Zero:
        return 0.0;
      case KernelType::Absolute:
        throw ModeNotSupported("absolute kernel is not differentiable");
    }
    return 0.0;
  }
};

InteractionKernel kernel_from_name(std::string_view name);
std::string_view kernel_name(KernelType type);

}  // namespace turnpike
