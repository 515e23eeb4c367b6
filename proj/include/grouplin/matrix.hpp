#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace grouplin {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Representation blocks in this
/// library are at most a few rows wide, so no expression templates.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
    CMatrix(std::size_t dim, std::vector<Complex> entries);
    CMatrix(std::size_t dim, std::initializer_list<Complex> entries)
        : CMatrix(dim, std::vector<Complex>(entries)) {}

    static CMatrix identity(std::size_t dim);
    static CMatrix scalar(Complex value) { return CMatrix(1, {value}); }

    std::size_t dim() const noexcept { return dim_; }
    Complex& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * dim_ + c]; }
    Complex operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * dim_ + c]; }
    std::span<const Complex> data() const noexcept { return a_; }
    std::span<Complex> data() noexcept { return a_; }

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(Complex s);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

    CMatrix adjoint() const;
    Complex trace() const noexcept;
    double frobenius_sq() const noexcept;
    double max_abs_diff(const CMatrix& o) const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> a_;
};

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// ‖M‖ = sqrt(tr(M M*)).
double trace_norm(const CMatrix& m);

}  // namespace grouplin
