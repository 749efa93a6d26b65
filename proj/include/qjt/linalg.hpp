#ifndef QJT_LINALG_HPP
#define QJT_LINALG_HPP

#include "qjt/matrix.hpp"

#include <optional>
#include <vector>

namespace qjt {

/*
 * Exact dense linear algebra. Rational matrices go through fraction-free
 * Bareiss elimination (denominators cleared per row first); prime-field
 * matrices through plain Gauss-Jordan on the flat uint64 storage.
 */

struct Rref {
    Matrix mat;                       // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of the right kernel, returned as matrix columns.
Matrix kernel_basis(const Matrix& m);

// Basis of the column space: the original columns at the pivot positions.
Matrix image_basis(const Matrix& m);

// Solves A x = b column-wise for every column of b; free variables are set
// to zero. Returns nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Subspaces are column spans of matrices with equal row count (the ambient
// dimension). All take and return bases.
Matrix subspace_intersect(const Matrix& u, const Matrix& w);
Matrix subspace_sum(const Matrix& u, const Matrix& w);
// dim of U / (U cap W), i.e. dim(U+W) - dim(W).
std::size_t subspace_quotient_dim(const Matrix& u, const Matrix& w);
bool subspace_contains(const Matrix& u, const Matrix& w);  // W subset of U
bool subspace_equal(const Matrix& u, const Matrix& w);

}  // namespace qjt

#endif
