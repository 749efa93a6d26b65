#ifndef QJT_MATRIX_HPP
#define QJT_MATRIX_HPP

#include "qjt/scalar.hpp"

#include <cstddef>
#include <vector>

namespace qjt {

/*
 * Dense matrix over one scalar field. Dimensions are fixed at
 * construction. Storage is row-major and backend-specific: mpq entries
 * for Rational, flat uint64 for PrimeField, so elimination loops run
 * without per-entry tagging.
 */
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(FieldSpec::rational()) {}
    Matrix(std::size_t rows, std::size_t cols, FieldSpec field);

    static Matrix zeros(std::size_t rows, std::size_t cols, FieldSpec field);
    static Matrix identity(std::size_t n, FieldSpec field);
    // Row-major construction from integer entries, Rational field.
    static Matrix from_int_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;

    bool is_zero() const;

    // Writes `block` with its top-left corner at (i, j).
    void insert_block(std::size_t i, std::size_t j, const Matrix& block);
    // Adds c * block at (i, j).
    void accumulate_block(std::size_t i, std::size_t j, const Matrix& block,
                          const Scalar& c);
    Matrix submatrix(std::size_t i0, std::size_t j0, std::size_t nrows,
                     std::size_t ncols) const;
    Matrix column(std::size_t j) const;
    std::vector<Scalar> column_vector(std::size_t j) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols,
                               std::size_t ambient, FieldSpec field);

    Matrix to_field(const FieldSpec& f) const;

    std::string str() const;

    // Backend access for the elimination kernels.
    std::vector<mpq_class>& rat_data() { return rat_; }
    const std::vector<mpq_class>& rat_data() const { return rat_; }
    std::vector<std::uint64_t>& fp_data() { return fp_; }
    const std::vector<std::uint64_t>& fp_data() const { return fp_; }
    std::size_t index(std::size_t i, std::size_t j) const { return i * cols_ + j; }

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<mpq_class> rat_;
    std::vector<std::uint64_t> fp_;

    void check_field(const Matrix& o) const;
};

}  // namespace qjt

#endif
