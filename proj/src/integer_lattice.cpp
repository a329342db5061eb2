#include "csm/integer_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "csm/errors.hpp"

namespace csm {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalConsistency("integer overflow in lattice arithmetic");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw InternalConsistency("integer overflow in lattice arithmetic");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalConsistency("integer overflow in lattice arithmetic");
  return out;
}

// row_i -= q * row_j
void row_axpy(IntMatrix& m, int i, int j, std::int64_t q) {
  for (int c = 0; c < m.cols(); ++c) m.at(i, c) = checked_sub(m.at(i, c), checked_mul(q, m.at(j, c)));
}

// col_i += q * col_j
void col_axpy(IntMatrix& m, int i, int j, std::int64_t q) {
  for (int r = 0; r < m.rows(); ++r) m.at(r, i) = checked_add(m.at(r, i), checked_mul(q, m.at(r, j)));
}

void swap_rows(IntMatrix& m, int i, int j) {
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// In-place Gauss-Jordan over Q; returns the rank. Operates on all columns.
int gauss_jordan(RationalMatrix& m, int cols) {
  const int rows = static_cast<int>(m.size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (sgn(m[r][c]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const mpq_class inv = 1 / m[rank][c];
    for (int k = c; k < static_cast<int>(m[rank].size()); ++k) m[rank][k] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      const mpq_class factor = m[r][c];
      for (int k = c; k < static_cast<int>(m[r].size()); ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) m[r][c] = static_cast<long>(a.at(r, c));
  }
  return m;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<std::vector<std::int64_t>>& columns) {
  IntMatrix m(rows, static_cast<int>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows) throw InvalidOperands("column length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = columns[c][r];
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::column(int c) const {
  std::vector<std::int64_t> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<std::int64_t> IntMatrix::row(int r) const {
  return std::vector<std::int64_t>(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                                   data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

std::vector<std::int64_t> IntMatrix::operator*(std::span<const std::int64_t> v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidOperands("matrix-vector size mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out[r] = checked_add(out[r], checked_mul(at(r, c), v[c]));
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidOperands("matrix product size mismatch");
  IntMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      if (at(r, k) == 0) continue;
      for (int c = 0; c < o.cols_; ++c) {
        out.at(r, c) = checked_add(out.at(r, c), checked_mul(at(r, k), o.at(k, c)));
      }
    }
  }
  return out;
}

RowReduction unimodular_row_reduce(const IntMatrix& a) {
  RowReduction out{IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows()), a, 0};
  IntMatrix& e = out.echelon;
  int pivot_row = 0;
  for (int c = 0; c < e.cols() && pivot_row < e.rows(); ++c) {
    while (true) {
      int best = -1;
      for (int r = pivot_row; r < e.rows(); ++r) {
        if (e.at(r, c) != 0 && (best < 0 || std::llabs(e.at(r, c)) < std::llabs(e.at(best, c)))) best = r;
      }
      if (best < 0) break;
      if (best != pivot_row) {
        swap_rows(e, best, pivot_row);
        swap_rows(out.transform, best, pivot_row);
        swap_cols(out.inverse, best, pivot_row);
      }
      bool cleared = true;
      for (int r = pivot_row + 1; r < e.rows(); ++r) {
        if (e.at(r, c) == 0) continue;
        const std::int64_t q = e.at(r, c) / e.at(pivot_row, c);
        row_axpy(e, r, pivot_row, q);
        row_axpy(out.transform, r, pivot_row, q);
        col_axpy(out.inverse, pivot_row, r, q);
        if (e.at(r, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (e.at(pivot_row, c) == 0) continue;
    if (e.at(pivot_row, c) < 0) {
      for (int k = 0; k < e.cols(); ++k) e.at(pivot_row, k) = -e.at(pivot_row, k);
      for (int k = 0; k < e.rows(); ++k) out.transform.at(pivot_row, k) = -out.transform.at(pivot_row, k);
      for (int k = 0; k < e.rows(); ++k) out.inverse.at(k, pivot_row) = -out.inverse.at(k, pivot_row);
    }
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::vector<std::int64_t> diagonal_invariants(const IntMatrix& a) {
  IntMatrix m = a;
  std::vector<std::int64_t> diag;
  int t = 0;
  while (t < m.rows() && t < m.cols()) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    int pr = -1, pc = -1;
    for (int r = t; r < m.rows(); ++r) {
      for (int c = t; c < m.cols(); ++c) {
        if (m.at(r, c) != 0 && (pr < 0 || std::llabs(m.at(r, c)) < std::llabs(m.at(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);
    bool done = true;
    for (int r = t + 1; r < m.rows(); ++r) {
      const std::int64_t q = m.at(r, t) / m.at(t, t);
      if (q != 0) row_axpy(m, r, t, q);
      if (m.at(r, t) != 0) done = false;
    }
    for (int c = t + 1; c < m.cols(); ++c) {
      const std::int64_t q = m.at(t, c) / m.at(t, t);
      if (q != 0) col_axpy(m, c, t, -q);
      if (m.at(t, c) != 0) done = false;
    }
    if (done) {
      diag.push_back(std::llabs(m.at(t, t)));
      ++t;
    }
  }
  return diag;
}

LatticeIndex saturation_index(const IntMatrix& generators) {
  const auto diag = diagonal_invariants(generators);
  LatticeIndex out;
  out.rank = static_cast<int>(diag.size());
  for (std::int64_t d : diag) out.index = checked_mul(out.index, d);
  return out;
}

IntMatrix saturation_basis(const IntMatrix& generators) {
  const RowReduction rr = unimodular_row_reduce(generators);
  IntMatrix basis(generators.rows(), rr.rank);
  for (int r = 0; r < generators.rows(); ++r) {
    for (int c = 0; c < rr.rank; ++c) basis.at(r, c) = rr.inverse.at(r, c);
  }
  return basis;
}

LatticeNormal lattice_normal(const IntMatrix& face_generators,
                             std::span<const std::int64_t> extra_generator) {
  const int n = face_generators.rows();
  if (static_cast<int>(extra_generator.size()) != n) throw InvalidOperands("lattice_normal size mismatch");

  std::vector<std::vector<std::int64_t>> cone_columns;
  for (int c = 0; c < face_generators.cols(); ++c) cone_columns.push_back(face_generators.column(c));
  cone_columns.emplace_back(extra_generator.begin(), extra_generator.end());
  const IntMatrix cone = IntMatrix::from_columns(n, cone_columns);

  // Saturated basis B of span(cone); coordinates of x in B are the first
  // `rank` entries of U x.
  const RowReduction cone_rr = unimodular_row_reduce(cone);
  const int rank = cone_rr.rank;
  const int face_rank = rational_rank(face_generators);
  if (face_rank != rank - 1) {
    throw InvalidOperands("extra generator does not raise the dimension of the face");
  }
  auto coordinates = [&](std::span<const std::int64_t> x) {
    const auto ux = cone_rr.transform * x;
    return std::vector<std::int64_t>(ux.begin(), ux.begin() + rank);
  };

  std::vector<std::vector<std::int64_t>> face_coords;
  for (int c = 0; c < face_generators.cols(); ++c) face_coords.push_back(coordinates(face_generators.column(c)));
  const IntMatrix face_in_basis = face_coords.empty() ? IntMatrix(rank, 0) : IntMatrix::from_columns(rank, face_coords);

  // Quotient Z^rank / sat(face) ≅ Z via the last row φ of the reducing
  // transform; the matching column y of its inverse has φ(y) = 1.
  const RowReduction face_rr = unimodular_row_reduce(face_in_basis);
  const auto phi = face_rr.transform.row(rank - 1);
  auto y = face_rr.inverse.column(rank - 1);

  const auto extra_coords = coordinates(extra_generator);
  std::int64_t s = 0;
  for (int i = 0; i < rank; ++i) s = checked_add(s, checked_mul(phi[i], extra_coords[i]));
  if (s < 0) {
    s = -s;
    for (auto& yi : y) yi = -yi;
  }

  const IntMatrix basis = saturation_basis(cone);
  LatticeNormal out;
  out.vector = basis * std::span<const std::int64_t>(y);
  out.multiplicity = s;
  return out;
}

int rational_rank(const IntMatrix& a) {
  RationalMatrix m = to_rational(a);
  return gauss_jordan(m, a.cols());
}

bool in_rational_span(const IntMatrix& generators, std::span<const std::int64_t> v) {
  if (static_cast<int>(v.size()) != generators.rows()) throw InvalidOperands("span test size mismatch");
  RationalMatrix m = to_rational(generators);
  for (int r = 0; r < generators.rows(); ++r) m[r].push_back(mpq_class(static_cast<long>(v[r])));
  const int rank_without = rational_rank(generators);
  const int rank_with = gauss_jordan(m, generators.cols() + 1);
  return rank_with == rank_without;
}

std::optional<std::vector<mpq_class>> solve_square(const IntMatrix& a, const std::vector<mpz_class>& b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) throw InvalidOperands("solve_square needs a square system");
  RationalMatrix m = to_rational(a);
  for (int r = 0; r < n; ++r) m[r].push_back(mpq_class(b[r]));
  if (gauss_jordan(m, n) < n) return std::nullopt;
  std::vector<mpq_class> x(n);
  for (int r = 0; r < n; ++r) x[r] = m[r][n];
  return x;
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) s += "; ";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) s += " ";
      s += std::to_string(m.at(r, c));
    }
  }
  return s + "]";
}

}  // namespace csm
