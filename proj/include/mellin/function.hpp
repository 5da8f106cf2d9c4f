#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace mellin {

using Complex = std::complex<double>;

/// A complex-valued function on the positive half-line, optionally with
/// analytic ordinary derivatives.
///
/// The derivative contract is expressed as a jet: jet(x, k) returns
/// f(x), f'(x), ..., f^(k)(x). Sources that compute all orders in one pass
/// (bandlimited models) supply the jet directly; sources with a per-order
/// formula can use with_derivative().
class EvaluableFunction {
 public:
  using ValueFn = std::function<Complex(double)>;
  using DerivativeFn = std::function<Complex(double, int)>;
  using JetFn = std::function<std::vector<Complex>(double, int)>;

  EvaluableFunction() = default;
  explicit EvaluableFunction(ValueFn value);

  static EvaluableFunction with_derivative(ValueFn value, DerivativeFn derivative);
  static EvaluableFunction with_jet(ValueFn value, JetFn jet);

  Complex operator()(double x) const { return value_(x); }

  bool has_derivatives() const { return static_cast<bool>(jet_); }

  /// f^(k)(x); throws NumericalError("derivative unavailable") without analytic derivatives.
  Complex derivative(double x, int k) const;

  /// f^(0..k)(x); same failure mode as derivative().
  std::vector<Complex> jet(double x, int k) const;

 private:
  ValueFn value_;
  JetFn jet_;
};

}  // namespace mellin
