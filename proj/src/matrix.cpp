#include "grouplin/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace grouplin {

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (a_.size() != dim_ * dim_) throw std::invalid_argument("matrix is not square");
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
    for (auto& x : a_) x *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t d = a.dim_;
    CMatrix c(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < d; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

CMatrix CMatrix::adjoint() const {
    CMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
}

Complex CMatrix::trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_sq() const noexcept {
    double s = 0.0;
    for (const auto& x : a_) s += std::norm(x);
    return s;
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
    return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    CMatrix k(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t p = 0; p < db; ++p)
                for (std::size_t q = 0; q < db; ++q) k(i * db + p, j * db + q) = aij * b(p, q);
        }
    return k;
}

double trace_norm(const CMatrix& m) { return std::sqrt(m.frobenius_sq()); }

}  // namespace grouplin
