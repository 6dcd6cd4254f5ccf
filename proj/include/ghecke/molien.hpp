#pragma once

#include "ghecke/matrix.hpp"
#include "ghecke/upoly.hpp"

#include <optional>
#include <vector>

namespace ghecke {

struct RationalFunction {
  RPoly numerator;
  RPoly denominator;
};

struct PoincareSeries {
  std::size_t truncation = 0;
  std::vector<Integer> coefficients;       // c_0 .. c_N
  std::optional<RationalFunction> witness;  // numerator / denominator expanding to the coefficients
};

/// Graded dimensions of the H-invariant n-forms with polynomial coefficients on V, where H
/// is given by its matrices on V (all of the same size m; zero-dimensional V is allowed).
/// c_d counts forms sum f_I dx_I with f_I homogeneous of degree d.
PoincareSeries molien_forms(const std::vector<RMatrix>& action_on_v, std::size_t dim_v, std::size_t n,
                            std::size_t truncation);

/// Power series coefficients of numerator / denominator up to t^N.
std::vector<Rational> expand(const RationalFunction& f, std::size_t truncation);

}  // namespace ghecke
