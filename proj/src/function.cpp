#include "mellin/function.hpp"

#include <utility>

#include "mellin/error.hpp"

namespace mellin {

EvaluableFunction::EvaluableFunction(ValueFn value) : value_(std::move(value)) {}

EvaluableFunction EvaluableFunction::with_derivative(ValueFn value, DerivativeFn derivative) {
  EvaluableFunction f(std::move(value));
  f.jet_ = [d = std::move(derivative)](double x, int k) {
    std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) out[static_cast<std::size_t>(j)] = d(x, j);
    return out;
  };
  return f;
}

EvaluableFunction EvaluableFunction::with_jet(ValueFn value, JetFn jet) {
  EvaluableFunction f(std::move(value));
  f.jet_ = std::move(jet);
  return f;
}

Complex EvaluableFunction::derivative(double x, int k) const {
  return jet(x, k).back();
}

std::vector<Complex> EvaluableFunction::jet(double x, int k) const {
  if (k < 0) throw ValidationError("derivative order must be nonnegative");
  if (k == 0) return {value_(x)};
  if (!jet_) throw NumericalError("derivative unavailable");
  return jet_(x, k);
}

}  // namespace mellin
