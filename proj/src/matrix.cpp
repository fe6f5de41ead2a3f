#include "kpow/matrix.hpp"

#include <sstream>

namespace kpow {

ExactMatrix::ExactMatrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

ExactMatrix::ExactMatrix(FieldSpec f, std::size_t rows, std::size_t cols,
                         std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), data_(std::move(entries)) {
    check(data_.size() == rows_ * cols_, "entry count does not match dimensions");
    for (const auto& s : data_)
        check(s.field() == field_, "matrix entry lies in the wrong field");
}

ExactMatrix ExactMatrix::identity(FieldSpec f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

ExactMatrix ExactMatrix::zero(FieldSpec f, std::size_t rows, std::size_t cols) {
    return ExactMatrix(f, rows, cols);
}

ExactMatrix ExactMatrix::diagonal(FieldSpec f, const std::vector<Scalar>& d) {
    ExactMatrix m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

ExactMatrix ExactMatrix::from_ints(FieldSpec f, std::size_t rows, std::size_t cols,
                                   const std::vector<long>& entries) {
    check(entries.size() == rows * cols, "entry count does not match dimensions");
    std::vector<Scalar> data;
    data.reserve(entries.size());
    for (long e : entries) data.emplace_back(f, e);
    return ExactMatrix(f, rows, cols, std::move(data));
}

const Scalar& ExactMatrix::at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
}

Scalar& ExactMatrix::at(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    check(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_,
          "matrix addition shape/field mismatch");
    ExactMatrix out(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + o.data_[k];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    check(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_,
          "matrix subtraction shape/field mismatch");
    ExactMatrix out(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - o.data_[k];
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const { return matmul(*this, o); }

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
    check(c.field() == field_, "scalar field mismatch");
    ExactMatrix out(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * c;
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (data_[k] != o.data_[k]) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Scalar ExactMatrix::trace() const {
    check(is_square(), "trace of a non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

bool ExactMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
    check(a.field() == b.field(), "matmul field mismatch");
    check(a.cols() == b.rows(), "matmul dimension mismatch");
    ExactMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) = out.at(i, j) + aik * bkj;
            }
        }
    return out;
}

Scalar det(const ExactMatrix& a) {
    check(a.is_square(), "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    ExactMatrix m = a;
    Scalar result = Scalar::one(a.field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col).is_zero()) ++piv;
        if (piv == n) return Scalar::zero(a.field());
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            result = -result;
        }
        const Scalar& p = m.at(col, col);
        result = result * p;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col) / p;
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
        }
    }
    return result;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    check(a.field() == b.field(), "kron field mismatch");
    ExactMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return out;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
    check(a.field() == b.field(), "direct sum field mismatch");
    ExactMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks, FieldSpec f) {
    ExactMatrix out(f, 0, 0);
    for (const auto& b : blocks) out = direct_sum(out, b);
    return out;
}

std::size_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    std::size_t acc = 1;
    for (std::size_t k = 1; k <= r; ++k) acc = acc * (n - r + k) / k;
    return acc;
}

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > n) return out;
    std::vector<std::size_t> cur(r);
    for (std::size_t i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        // advance to the next r-subset in lex order
        std::size_t i = r;
        while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

ExactMatrix compound(const ExactMatrix& a, std::size_t r) {
    check(r >= 1, "compound degree must be >= 1");
    const auto row_sets = subsets_lex(a.rows(), r);
    const auto col_sets = subsets_lex(a.cols(), r);
    ExactMatrix out(a.field(), row_sets.size(), col_sets.size());
    ExactMatrix minor(a.field(), r, r);
    for (std::size_t i = 0; i < row_sets.size(); ++i)
        for (std::size_t j = 0; j < col_sets.size(); ++j) {
            for (std::size_t u = 0; u < r; ++u)
                for (std::size_t v = 0; v < r; ++v)
                    minor.at(u, v) = a.at(row_sets[i][u], col_sets[j][v]);
            out.at(i, j) = det(minor);
        }
    return out;
}

bool commute_check(const std::vector<ExactMatrix>& ms) {
    for (const auto& m : ms) {
        check(m.is_square(), "commute_check expects square matrices");
        if (!ms.empty()) {
            check(m.field() == ms.front().field(), "commute_check field mismatch");
            check(m.rows() == ms.front().rows(), "commute_check size mismatch");
        }
        if (!is_invertible(m)) return false;
    }
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (matmul(ms[i], ms[j]) != matmul(ms[j], ms[i])) return false;
    return true;
}

Rref rref(const ExactMatrix& a) {
    Rref out{a, {}};
    ExactMatrix& m = out.mat;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        Scalar inv = m.at(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const ExactMatrix& a) { return rref(a).pivots.size(); }

bool is_invertible(const ExactMatrix& a) {
    return a.is_square() && rank(a) == a.rows();
}

ExactMatrix inverse(const ExactMatrix& a) {
    check(a.is_square(), "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    // eliminate on [a | I]
    ExactMatrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar::one(a.field());
    }
    Rref r = rref(aug);
    check(r.pivots.size() >= n && r.pivots[n - 1] == n - 1, "matrix is singular");
    ExactMatrix out(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = r.mat.at(i, n + j);
    return out;
}

ExactMatrix kernel_basis(const ExactMatrix& a) {
    Rref r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    ExactMatrix out(a.field(), a.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        out.at(fc, k) = Scalar::one(a.field());
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            out.at(r.pivots[i], k) = -r.mat.at(i, fc);
    }
    return out;
}

ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b) {
    check(a.field() == b.field(), "solve field mismatch");
    check(a.rows() == b.rows(), "solve dimension mismatch");
    ExactMatrix aug(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    Rref r = rref(aug);
    check(r.pivots.size() == a.cols() &&
              (r.pivots.empty() || r.pivots.back() == a.cols() - 1),
          "solve: coefficient matrix does not have full column rank");
    // consistency: no pivot may fall in the right block
    for (std::size_t i = r.pivots.size(); i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            check(r.mat.at(i, a.cols() + j).is_zero(), "solve: inconsistent system");
    ExactMatrix out(a.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) = r.mat.at(i, a.cols() + j);
    return out;
}

} // namespace kpow
