#include "saddlegap/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace saddlegap {

Polynomial::Polynomial(std::vector<Complex> coeffs, int degree_bound)
    : coeffs_(std::move(coeffs)), degree_bound_(degree_bound) {
  if (coeffs_.empty()) coeffs_.assign(1, Complex(0.0));
  if (degree_bound_ < 0) throw std::invalid_argument("negative degree bound");
  if (static_cast<int>(coeffs_.size()) > degree_bound_ + 1)
    throw std::invalid_argument("coefficient count exceeds degree bound");
}

Polynomial::Polynomial(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)),
      degree_bound_(coeffs_.empty() ? 0
                                    : static_cast<int>(coeffs_.size()) - 1) {
  if (coeffs_.empty()) coeffs_.assign(1, Complex(0.0));
}

int Polynomial::degree() const {
  for (int t = static_cast<int>(coeffs_.size()) - 1; t >= 0; --t)
    if (coeffs_[t] != Complex(0.0)) return t;
  return 0;
}

Complex Polynomial::eval(Complex lambda) const {
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * lambda + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial({Complex(0.0)}, 0);
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t t = 0; t + 1 < coeffs_.size(); ++t)
    d[t] = static_cast<double>(t + 1) * coeffs_[t + 1];
  return Polynomial(std::move(d), std::max(0, degree_bound_ - 1));
}

Polynomial Polynomial::real_part() const {
  std::vector<Complex> r(coeffs_.size());
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    r[t] = Complex(coeffs_[t].real(), 0.0);
  return Polynomial(std::move(r), degree_bound_);
}

bool Polynomial::has_real_coefficients(double tol) const {
  for (const auto& c : coeffs_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  std::vector<Complex> out(coeffs_.size() + other.coeffs_.size() - 1,
                           Complex(0.0));
  for (std::size_t s = 0; s < coeffs_.size(); ++s)
    for (std::size_t t = 0; t < other.coeffs_.size(); ++t)
      out[s + t] += coeffs_[s] * other.coeffs_[t];
  return Polynomial(std::move(out), degree_bound_ + other.degree_bound_);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Complex> out(std::max(coeffs_.size(), other.coeffs_.size()),
                           Complex(0.0));
  for (std::size_t t = 0; t < coeffs_.size(); ++t) out[t] += coeffs_[t];
  for (std::size_t t = 0; t < other.coeffs_.size(); ++t)
    out[t] += other.coeffs_[t];
  return Polynomial(std::move(out),
                    std::max(degree_bound_, other.degree_bound_));
}

Polynomial Polynomial::operator*(Complex scalar) const {
  std::vector<Complex> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return Polynomial(std::move(out), degree_bound_);
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots,
                                  NormalizationClass cls) {
  for (const auto& r : roots)
    if (r == Complex(0.0))
      throw std::invalid_argument(
          "zero root not admissible in a factorized normalized polynomial");
  Polynomial p = Polynomial::one();
  for (const auto& r : roots)
    p = p * Polynomial({Complex(1.0), -1.0 / r}, 1);
  if (cls == NormalizationClass::Q)
    p = p * Polynomial({Complex(0.0), Complex(1.0)}, 1);
  return p;
}

}  // namespace saddlegap
