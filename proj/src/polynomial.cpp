#include "csm/polynomial.hpp"

#include <algorithm>
#include <cstdlib>

namespace csm {

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coefficients)
    : coefficients_(coefficients) {
  trim();
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(std::int64_t coefficient, int degree) {
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::int64_t IntPolynomial::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[degree];
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::shifted(std::int64_t shift) const {
  std::vector<std::int64_t> out(coefficients_.size(), 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    std::int64_t power = 1;
    // (x + s)^i = Σ_j C(i, j) s^(i-j) x^j
    for (std::size_t j = i + 1; j-- > 0;) {
      out[j] += coefficients_[i] * binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) * power;
      power *= shift;
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_by_x_minus_one(std::int64_t& remainder) const {
  if (coefficients_.empty()) {
    remainder = 0;
    return {};
  }
  // Synthetic division by the root 1.
  const std::size_t n = coefficients_.size();
  std::vector<std::int64_t> quotient(n - 1, 0);
  std::int64_t carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry += coefficients_[i];
    if (i > 0) quotient[i - 1] = carry;
  }
  remainder = carry;
  return IntPolynomial(std::move(quotient));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<std::int64_t> c(std::max(coefficients_.size(), o.coefficients_.size()), 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) c[i] += coefficients_[i];
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i) c[i] += o.coefficients_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + o * -1; }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> c(coefficients_.size() + o.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < o.coefficients_.size(); ++j) {
      c[i + j] += coefficients_[i] * o.coefficients_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(std::int64_t k) const {
  std::vector<std::int64_t> c = coefficients_;
  for (auto& x : c) x *= k;
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = coefficients_[i];
    if (c == 0) continue;
    const std::int64_t mag = std::llabs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += variable;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace csm
