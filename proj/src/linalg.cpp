#include "liediff/linalg.hpp"

#include "liediff/errors.hpp"

namespace liediff {

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, RatFunc(nvars)) {}

FieldMatrix FieldMatrix::identity(std::size_t n, std::size_t nvars) {
    FieldMatrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc::constant(nvars, 1);
    return m;
}

std::vector<RatFunc> FieldMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

FieldMatrix FieldMatrix::columns(const std::vector<std::size_t>& which) const {
    FieldMatrix out(rows_, which.size(), nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < which.size(); ++k) out(i, k) = (*this)(i, which[k]);
    return out;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix out(cols_, rows_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::ArityMismatch, "matrix product shape");
    FieldMatrix out(a.rows_, b.cols_, a.nvars_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

namespace {

struct BareissResult {
    std::size_t rank = 0;
    RatFunc last_pivot;
    bool negated = false;
};

BareissResult bareiss(FieldMatrix& m) {
    BareissResult res;
    res.last_pivot = RatFunc::constant(m.nvars(), 1);
    RatFunc prev = RatFunc::constant(m.nvars(), 1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
            res.negated = !res.negated;
        }
        const RatFunc pivot = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) m(i, j) = (pivot * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = RatFunc(m.nvars());
        }
        prev = pivot;
        res.last_pivot = pivot;
        ++r;
    }
    res.rank = r;
    return res;
}

} // namespace

std::size_t bareiss_rank(FieldMatrix m) {
    return bareiss(m).rank;
}

RatFunc bareiss_determinant(FieldMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ArityMismatch, "determinant of a non-square matrix");
    if (m.rows() == 0) return RatFunc::constant(m.nvars(), 1);
    const auto res = bareiss(m);
    if (res.rank < m.rows()) return RatFunc(m.nvars());
    return res.negated ? -res.last_pivot : res.last_pivot;
}

std::optional<FieldMatrix> inverse(const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ArityMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    FieldMatrix a = m;
    FieldMatrix inv = FieldMatrix::identity(n, m.nvars());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        const RatFunc scale = a(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) = a(c, j) * scale;
            inv(c, j) = inv(c, j) * scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const RatFunc f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::optional<std::vector<RatFunc>> null_vector(const FieldMatrix& m) {
    // Reduced row echelon form.
    FieldMatrix a = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        const RatFunc scale = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * scale;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const RatFunc f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::size_t free_col = a.cols();
    for (std::size_t c = 0, p = 0; c < a.cols(); ++c) {
        if (p < pivot_cols.size() && pivot_cols[p] == c) {
            ++p;
            continue;
        }
        free_col = c;
        break;
    }
    if (free_col == a.cols()) return std::nullopt;
    std::vector<RatFunc> x(a.cols(), RatFunc(a.nvars()));
    x[free_col] = RatFunc::constant(a.nvars(), 1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -a(i, free_col);
    return x;
}

} // namespace liediff
