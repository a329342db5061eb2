#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace csm {

// Integer polynomial in one variable; coefficient i multiplies x^i.
// Always canonical: no trailing zero coefficients, so the zero polynomial has
// an empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coefficients);
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);

  static IntPolynomial monomial(std::int64_t coefficient, int degree);

  const std::vector<std::int64_t>& coefficients() const { return coefficients_; }
  std::int64_t coefficient(int degree) const;
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  std::int64_t evaluate(std::int64_t x) const;

  // p(x) ↦ p(x + shift), by Taylor expansion with binomial coefficients.
  IntPolynomial shifted(std::int64_t shift) const;

  // Exact division by (x - 1). Returns the quotient and sets `remainder`.
  IntPolynomial divide_by_x_minus_one(std::int64_t& remainder) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(std::int64_t c) const;

  bool operator==(const IntPolynomial&) const = default;

  std::string to_string(char variable = 't') const;

 private:
  void trim();

  std::vector<std::int64_t> coefficients_;
};

// Exact binomial coefficient; 0 outside 0 <= k <= n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace csm
