#pragma once

#include <cstddef>
#include <vector>

#include "stablepoly/multipoly.hpp"

namespace stablepoly {

// Rectangular matrix of MultiPoly entries sharing one variable frame and
// coefficient domain.
class PolyMatrix {
  public:
    PolyMatrix(std::size_t rows, std::size_t cols, const MultiPoly& fill);
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::string>& vars() const { return entries_.front().vars(); }
    Domain domain() const { return entries_.front().domain(); }

    const MultiPoly& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    MultiPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    PolyMatrix submatrix(const std::vector<std::size_t>& row_set,
                         const std::vector<std::size_t>& col_set) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

    bool operator==(const PolyMatrix& o) const;

    bool all_entries_constant() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<MultiPoly> entries_;
};

inline constexpr int kDefaultDetCap = 8;

// Exact determinant, standard alternating-sum sign convention. Rational
// domain: fraction-free (Bareiss) elimination for sizes 4..cap, Laplace
// below size 4 and as fallback when a pivot vanishes. Float domain:
// division-free Laplace throughout. Throws on non-square or size > cap.
MultiPoly det(const PolyMatrix& m, int cap = kDefaultDetCap);

// rows x cols truncation of the upper-triangular Toeplitz array of the
// coefficients of f in var_index: entry (r, c) = f_{c-r}, out-of-range
// coefficients zero. Default slicing variable: the last one.
PolyMatrix toeplitz(const MultiPoly& f, std::size_t rows, std::size_t cols);
PolyMatrix toeplitz(const MultiPoly& f, std::size_t rows, std::size_t cols,
                    std::size_t var_index);

}  // namespace stablepoly
