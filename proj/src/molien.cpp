#include "ghecke/molien.hpp"

#include <stdexcept>

namespace ghecke {

std::vector<Rational> expand(const RationalFunction& f, std::size_t truncation) {
  auto inv = f.denominator.series_inverse(truncation);
  std::vector<Rational> out(truncation + 1, Rational(0));
  for (std::size_t d = 0; d <= truncation; ++d)
    for (std::size_t j = 0; j <= d; ++j) out[d] += f.numerator.coeff(j) * inv[d - j];
  return out;
}

PoincareSeries molien_forms(const std::vector<RMatrix>& action_on_v, std::size_t dim_v, std::size_t n,
                            std::size_t truncation) {
  if (action_on_v.empty()) throw std::invalid_argument("molien_forms: empty group");
  const long order = static_cast<long>(action_on_v.size());
  std::vector<Rational> sum(truncation + 1, Rational(0));
  std::vector<RPoly> denominators;
  std::vector<Rational> elementary;
  for (const auto& a : action_on_v) {
    if (a.rows() != dim_v || a.cols() != dim_v) throw std::invalid_argument("molien_forms: matrix size mismatch");
    RMatrix dual = dim_v ? inverse(a)->transpose() : a;
    // det(t I - A) = sum_k c_k t^k; det(1 + y A) has y^n coefficient (-1)^n c_{m-n};
    // det(1 - t A) = sum_k c_{m-k} t^k.
    auto c = characteristic_polynomial(dual);
    Rational e_n = 0;
    if (n <= dim_v) {
      e_n = c[dim_v - n];
      if (n % 2 == 1) e_n = -e_n;
    }
    std::vector<Rational> rev(dim_v + 1);
    for (std::size_t k = 0; k <= dim_v; ++k) rev[k] = c[dim_v - k];
    RPoly den(rev);
    elementary.push_back(e_n);
    denominators.push_back(den);
    if (sgn(e_n) == 0) continue;
    auto inv = den.series_inverse(truncation);
    for (std::size_t d = 0; d <= truncation; ++d) sum[d] += e_n * inv[d];
  }
  PoincareSeries out;
  out.truncation = truncation;
  for (auto& s : sum) {
    s /= order;
    if (s.get_den() != 1 || sgn(s) < 0) throw std::logic_error("Molien average is not a nonnegative integer");
    out.coefficients.push_back(s.get_num());
  }

  RPoly common = RPoly::constant(1);
  std::vector<RPoly> distinct;
  for (const auto& d : denominators) {
    bool seen = false;
    for (const auto& e : distinct) seen = seen || e == d;
    if (!seen) {
      distinct.push_back(d);
      common = common * d;
    }
  }
  if (common.degree() <= static_cast<long>(truncation)) {
    RPoly num;
    for (std::size_t h = 0; h < denominators.size(); ++h) {
      if (sgn(elementary[h]) == 0) continue;
      auto [q, r] = common.divmod(denominators[h]);
      num = num + elementary[h] * q;
    }
    num = Rational(1, order) * num;
    RationalFunction f{num, common};
    auto check = expand(f, truncation);
    bool ok = true;
    for (std::size_t d = 0; d <= truncation; ++d) ok = ok && check[d] == Rational(out.coefficients[d]);
    if (ok) out.witness = std::move(f);
  }
  return out;
}

}  // namespace ghecke
