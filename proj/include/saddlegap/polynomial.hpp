#ifndef SADDLEGAP_POLYNOMIAL_HPP
#define SADDLEGAP_POLYNOMIAL_HPP

#include <complex>
#include <vector>

namespace saddlegap {

using Complex = std::complex<double>;

/// Normalization classes for the extremal problems.
/// P(T):  p(0) = 1, deg <= T.
/// Q(T+1): q(0) = 0, q'(0) = 1, deg <= T+1.
enum class NormalizationClass { P, Q };

/// Dense complex polynomial in the monomial basis.
/// coefficients[t] multiplies lambda^t.
class Polynomial {
public:
  Polynomial() : coeffs_(1, Complex(0.0)), degree_bound_(0) {}
  Polynomial(std::vector<Complex> coeffs, int degree_bound);

  /// Convenience: degree bound taken from the coefficient count.
  explicit Polynomial(std::vector<Complex> coeffs);

  const std::vector<Complex>& coefficients() const { return coeffs_; }
  int degree_bound() const { return degree_bound_; }
  /// Index of the highest nonzero coefficient (0 for the zero polynomial).
  int degree() const;

  /// Horner evaluation.
  Complex eval(Complex lambda) const;

  Polynomial derivative() const;

  /// Coefficient-wise real part (Lawson/minimax symmetrization helper).
  Polynomial real_part() const;

  bool has_real_coefficients(double tol = 0.0) const;

  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(Complex scalar) const;
  friend Polynomial operator*(Complex scalar, const Polynomial& p) {
    return p * scalar;
  }

  /// Build a normalized polynomial from its nonzero roots.
  /// P: prod_k (1 - lambda/r_k).  Q: lambda * prod_k (1 - lambda/r_k).
  /// Throws std::invalid_argument on a zero root (P(0)=1 impossible).
  static Polynomial from_roots(const std::vector<Complex>& roots,
                               NormalizationClass cls);

  static Polynomial one() { return Polynomial({Complex(1.0)}, 0); }

private:
  std::vector<Complex> coeffs_;
  int degree_bound_;
};

}  // namespace saddlegap

#endif
