#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace csm {

// Small dense integer matrix, row-major. Arithmetic on it is overflow-checked;
// an overflow raises InternalConsistency rather than wrapping silently.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);
  // Builds a matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(int rows, const std::vector<std::vector<std::int64_t>>& columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<std::int64_t> column(int c) const;
  std::vector<std::int64_t> row(int r) const;
  std::vector<std::int64_t> operator*(std::span<const std::int64_t> v) const;
  IntMatrix operator*(const IntMatrix& o) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// U·A = E with U unimodular and E in row echelon form (pivots positive,
// entries below each pivot zero). `inverse` is U⁻¹, maintained alongside.
struct RowReduction {
  IntMatrix transform;
  IntMatrix inverse;
  IntMatrix echelon;
  int rank = 0;
};

RowReduction unimodular_row_reduce(const IntMatrix& a);

// Nonzero diagonal entries (absolute values) after diagonalizing `a` by
// unimodular row and column operations. Their product is the gcd of the
// rank-sized minors of `a`.
std::vector<std::int64_t> diagonal_invariants(const IntMatrix& a);

struct LatticeIndex {
  int rank = 0;
  // [ (span_R(columns) ∩ Z^n) : span_Z(columns) ].
  std::int64_t index = 1;
};

// Index of the lattice spanned by the columns of `generators` inside its
// saturation, i.e. the gcd of the maximal minors.
LatticeIndex saturation_index(const IntMatrix& generators);

// Columns form a Z-basis of span_R(columns) ∩ Z^n.
IntMatrix saturation_basis(const IntMatrix& generators);

struct LatticeNormal {
  // Primitive vector v with span_Z(v, L_face) = span_R(cone) ∩ Z^n.
  std::vector<std::int64_t> vector;
  // `extra_generator` ≡ multiplicity · v modulo the face lattice.
  std::int64_t multiplicity = 0;
};

// Lattice normal of a cone relative to a codimension-one face. The cone is
// spanned by `face_generators` together with `extra_generator`; the normal is
// oriented towards `extra_generator`. Throws InvalidOperands when the extra
// generator lies in the face span.
LatticeNormal lattice_normal(const IntMatrix& face_generators,
                             std::span<const std::int64_t> extra_generator);

// Exact rational rank.
int rational_rank(const IntMatrix& a);

// Whether v ∈ span_R(columns of generators), by exact rational elimination.
bool in_rational_span(const IntMatrix& generators, std::span<const std::int64_t> v);

// Solves A x = b for square A over Q. Returns nullopt when A is singular.
std::optional<std::vector<mpq_class>> solve_square(const IntMatrix& a,
                                                   const std::vector<mpz_class>& b);

std::string to_string(const IntMatrix& m);

}  // namespace csm
