#include "qjt/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qjt {

namespace {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}
}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field) {
    if (field_.kind == FieldSpec::Kind::Rational)
        rat_.assign(rows * cols, mpq_class(0));
    else
        fp_.assign(rows * cols, 0);
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols, FieldSpec field) {
    return Matrix(rows, cols, field);
}

Matrix Matrix::identity(std::size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
    return m;
}

Matrix Matrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c, FieldSpec::rational());
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m.rat_[m.index(i, j)] = mpq_class(rows[i][j]);
    }
    return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    if (field_.kind == FieldSpec::Kind::Rational)
        return Scalar::rational(rat_[index(i, j)]);
    return Scalar::prime_field(fp_[index(i, j)], field_.prime);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    if (v.field() != field_)
        throw FieldMismatchError("matrix/scalar field mismatch");
    if (field_.kind == FieldSpec::Kind::Rational)
        rat_[index(i, j)] = v.rat();
    else
        fp_[index(i, j)] = v.fp();
}

void Matrix::check_field(const Matrix& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("matrix fields differ: " + field_.str() +
                                 " vs " + o.field_.str());
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_field(o);
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
    Matrix r(rows_, o.cols_, field_);
    if (field_.kind == FieldSpec::Kind::Rational) {
        mpq_class acc;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const mpq_class& a = rat_[index(i, k)];
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const mpq_class& b = o.rat_[o.index(k, j)];
                    if (b == 0) continue;
                    acc = a * b;
                    r.rat_[r.index(i, j)] += acc;
                }
            }
    } else {
        const std::uint64_t p = field_.prime;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint64_t a = fp_[index(i, k)];
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    std::uint64_t b = o.fp_[o.index(k, j)];
                    if (b == 0) continue;
                    std::uint64_t& c = r.fp_[r.index(i, j)];
                    c = (c + mulmod(a, b, p)) % p;
                }
            }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum shape");
    Matrix r = *this;
    if (field_.kind == FieldSpec::Kind::Rational) {
        for (std::size_t i = 0; i < rat_.size(); ++i) r.rat_[i] += o.rat_[i];
    } else {
        const std::uint64_t p = field_.prime;
        for (std::size_t i = 0; i < fp_.size(); ++i)
            r.fp_[i] = (r.fp_[i] + o.fp_[i]) % p;
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape");
    Matrix r = *this;
    if (field_.kind == FieldSpec::Kind::Rational) {
        for (std::size_t i = 0; i < rat_.size(); ++i) r.rat_[i] -= o.rat_[i];
    } else {
        const std::uint64_t p = field_.prime;
        for (std::size_t i = 0; i < fp_.size(); ++i)
            r.fp_[i] = (r.fp_[i] + p - o.fp_[i]) % p;
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    if (c.field() != field_) throw FieldMismatchError("scale field mismatch");
    Matrix r = *this;
    if (field_.kind == FieldSpec::Kind::Rational) {
        for (auto& v : r.rat_) v *= c.rat();
    } else {
        const std::uint64_t p = field_.prime;
        for (auto& v : r.fp_) v = mulmod(v, c.fp(), p);
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (field_.kind == FieldSpec::Kind::Rational)
                r.rat_[r.index(j, i)] = rat_[index(i, j)];
            else
                r.fp_[r.index(j, i)] = fp_[index(i, j)];
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    return field_.kind == FieldSpec::Kind::Rational ? rat_ == o.rat_
                                                    : fp_ == o.fp_;
}

bool Matrix::is_zero() const {
    if (field_.kind == FieldSpec::Kind::Rational) {
        for (const auto& v : rat_)
            if (v != 0) return false;
    } else {
        for (auto v : fp_)
            if (v != 0) return false;
    }
    return true;
}

void Matrix::insert_block(std::size_t i, std::size_t j, const Matrix& block) {
    check_field(block);
    if (i + block.rows_ > rows_ || j + block.cols_ > cols_)
        throw std::out_of_range("block outside matrix");
    for (std::size_t r = 0; r < block.rows_; ++r)
        for (std::size_t c = 0; c < block.cols_; ++c) {
            if (field_.kind == FieldSpec::Kind::Rational)
                rat_[index(i + r, j + c)] = block.rat_[block.index(r, c)];
            else
                fp_[index(i + r, j + c)] = block.fp_[block.index(r, c)];
        }
}

void Matrix::accumulate_block(std::size_t i, std::size_t j, const Matrix& block,
                              const Scalar& c) {
    check_field(block);
    if (c.field() != field_) throw FieldMismatchError("block scale mismatch");
    if (i + block.rows_ > rows_ || j + block.cols_ > cols_)
        throw std::out_of_range("block outside matrix");
    if (field_.kind == FieldSpec::Kind::Rational) {
        for (std::size_t r = 0; r < block.rows_; ++r)
            for (std::size_t cc = 0; cc < block.cols_; ++cc)
                rat_[index(i + r, j + cc)] += c.rat() * block.rat_[block.index(r, cc)];
    } else {
        const std::uint64_t p = field_.prime;
        for (std::size_t r = 0; r < block.rows_; ++r)
            for (std::size_t cc = 0; cc < block.cols_; ++cc) {
                std::uint64_t& v = fp_[index(i + r, j + cc)];
                v = (v + mulmod(c.fp(), block.fp_[block.index(r, cc)], p)) % p;
            }
    }
}

Matrix Matrix::submatrix(std::size_t i0, std::size_t j0, std::size_t nrows,
                         std::size_t ncols) const {
    if (i0 + nrows > rows_ || j0 + ncols > cols_)
        throw std::out_of_range("submatrix outside matrix");
    Matrix r(nrows, ncols, field_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) {
            if (field_.kind == FieldSpec::Kind::Rational)
                r.rat_[r.index(i, j)] = rat_[index(i0 + i, j0 + j)];
            else
                r.fp_[r.index(i, j)] = fp_[index(i0 + i, j0 + j)];
        }
    return r;
}

Matrix Matrix::column(std::size_t j) const { return submatrix(0, j, rows_, 1); }

std::vector<Scalar> Matrix::column_vector(std::size_t j) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    a.check_field(b);
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_, a.field_);
    r.insert_block(0, 0, a);
    r.insert_block(0, a.cols_, b);
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    a.check_field(b);
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack col mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_, a.field_);
    r.insert_block(0, 0, a);
    r.insert_block(a.rows_, 0, b);
    return r;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>>& cols,
                            std::size_t ambient, FieldSpec field) {
    Matrix r(ambient, cols.size(), field);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != ambient)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < ambient; ++i) r.set(i, j, cols[j][i]);
    }
    return r;
}

Matrix Matrix::to_field(const FieldSpec& f) const {
    if (f == field_) return *this;
    Matrix r(rows_, cols_, f);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.set(i, j, at(i, j).to_field(f));
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "[") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[[]]";
    return os.str();
}

}  // namespace qjt
