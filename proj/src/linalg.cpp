#include "qjt/linalg.hpp"

#include <stdexcept>

namespace qjt {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

// Gauss-Jordan over F_p on the flat storage.
Rref rref_fp(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::uint64_t p = m.field().prime;
    auto& a = m.fp_data();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a[pr * cols + j], a[r * cols + j]);
        const std::uint64_t inv = mod_inverse(a[r * cols + c], p);
        for (std::size_t j = c; j < cols; ++j)
            a[r * cols + j] = mulmod(a[r * cols + j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::uint64_t f = a[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, a[r * cols + j], p);
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return Rref{std::move(m), std::move(pivots)};
}

// Fraction-free Bareiss to echelon form, then exact normalization to RREF.
Rref rref_rational(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    auto& a = m.rat_data();
    auto at = [&](std::size_t i, std::size_t j) -> mpq_class& {
        return a[i * cols + j];
    };

    // Clear denominators row by row; row scaling preserves row space,
    // kernel, and pivot structure.
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    at(i, j).get_den().get_mpz_t());
        if (l != 1) {
            mpq_class f(l);
            for (std::size_t j = 0; j < cols; ++j) at(i, j) *= f;
        }
    }

    std::vector<std::size_t> pivots;
    mpz_class prev(1);
    std::size_t r = 0;
    mpz_class num, quo, rem;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && at(pr, c) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(at(pr, j), at(r, j));
        const mpz_class piv = at(r, c).get_num();
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class fac = at(i, c).get_num();
            for (std::size_t j = c; j < cols; ++j) {
                // Bareiss step: (piv*m_ij - fac*m_rj) / prev is exact.
                num = piv * at(i, j).get_num() - fac * at(r, j).get_num();
                mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                            prev.get_mpz_t());
                if (rem != 0)
                    throw std::logic_error("Bareiss division not exact");
                at(i, j) = mpq_class(quo);
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }

    // Normalize pivot rows and eliminate above the pivots.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        mpq_class inv = 1 / at(k, pc);
        for (std::size_t j = pc; j < cols; ++j) at(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            mpq_class f = at(i, pc);
            if (f == 0) continue;
            for (std::size_t j = pc; j < cols; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return Rref{std::move(m), std::move(pivots)};
}

void check_ambient(const Matrix& u, const Matrix& w) {
    if (u.rows() != w.rows())
        throw std::invalid_argument("ambient dimension mismatch: " +
                                    std::to_string(u.rows()) + " vs " +
                                    std::to_string(w.rows()));
    if (u.field() != w.field())
        throw FieldMismatchError("subspace fields differ");
}

}  // namespace

Rref rref(const Matrix& m) {
    if (m.field().kind == FieldSpec::Kind::Prime) return rref_fp(m);
    return rref_rational(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    const Rref r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    Matrix basis(cols, cols - r.pivots.size(), m.field());
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        basis.set(f, out, Scalar::one(m.field()));
        for (std::size_t k = 0; k < r.pivots.size(); ++k) {
            Scalar v = r.mat.at(k, f);
            if (!v.is_zero()) basis.set(r.pivots[k], out, -v);
        }
        ++out;
    }
    return basis;
}

Matrix image_basis(const Matrix& m) {
    const Rref r = rref(m);
    Matrix basis(m.rows(), r.pivots.size(), m.field());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        basis.insert_block(0, k, m.column(r.pivots[k]));
    return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape");
    const Rref r = rref(Matrix::hstack(a, b));
    // A pivot inside the b-block means an inconsistent column.
    for (std::size_t p : r.pivots)
        if (p >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols(), a.field());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(r.pivots[k], j, r.mat.at(k, a.cols() + j));
    return x;
}

Matrix subspace_intersect(const Matrix& u, const Matrix& w) {
    check_ambient(u, w);
    // ker [U | W]: a column (x; y) with Ux + Wy = 0 gives Ux in the
    // intersection, and all intersection vectors arise this way.
    const Matrix k = kernel_basis(Matrix::hstack(u, w));
    Matrix combos(u.cols(), k.cols(), u.field());
    for (std::size_t i = 0; i < u.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
            combos.set(i, j, k.at(i, j));
    return image_basis(u * combos);
}

Matrix subspace_sum(const Matrix& u, const Matrix& w) {
    check_ambient(u, w);
    return image_basis(Matrix::hstack(u, w));
}

std::size_t subspace_quotient_dim(const Matrix& u, const Matrix& w) {
    check_ambient(u, w);
    return rank(Matrix::hstack(u, w)) - rank(w);
}

bool subspace_contains(const Matrix& u, const Matrix& w) {
    check_ambient(u, w);
    return rank(Matrix::hstack(u, w)) == rank(u);
}

bool subspace_equal(const Matrix& u, const Matrix& w) {
    check_ambient(u, w);
    const std::size_t ru = rank(u), rw = rank(w);
    return ru == rw && rank(Matrix::hstack(u, w)) == ru;
}

}  // namespace qjt
