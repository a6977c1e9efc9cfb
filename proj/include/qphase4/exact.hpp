#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qphase4/errors.hpp"

namespace qphase4 {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when q == 1.
inline std::string to_string(const Rational& x) {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

/// A Gaussian rational: re + i*im with exact rational parts.
class ExactScalar {
   public:
    ExactScalar() = default;
    ExactScalar(int re) : re_(re) {}
    ExactScalar(Rational re) : re_(std::move(re)) {}
    ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactScalar i() { return ExactScalar(0, 1); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    ExactScalar conj() const { return {re_, -im_}; }
    /// |z|^2
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend ExactScalar operator-(const ExactScalar& a) { return {-a.re_, -a.im_}; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        const Rational n = b.norm2();
        if (n == 0) {
            throw DomainError("division by zero");
        }
        const ExactScalar t = a * b.conj();
        return {t.re_ / n, t.im_ / n};
    }
    ExactScalar& operator+=(const ExactScalar& b) {
        re_ += b.re_;
        im_ += b.im_;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& b) {
        re_ -= b.re_;
        im_ -= b.im_;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

   private:
    Rational re_ = 0;
    Rational im_ = 0;
};

/// Renders e.g. "0", "-1/2", "i", "1/2-1/2i".
inline std::string to_string(const ExactScalar& z) {
    if (z.im() == 0) {
        return to_string(z.re());
    }
    std::string im;
    if (z.im() == 1) {
        im = "i";
    } else if (z.im() == -1) {
        im = "-i";
    } else {
        im = to_string(z.im()) + "i";
    }
    if (z.re() == 0) {
        return im;
    }
    return to_string(z.re()) + (z.im() > 0 ? "+" : "") + im;
}

inline std::ostream& operator<<(std::ostream& out, const ExactScalar& z) { return out << to_string(z); }

/// i^k as a power k mod 4.
struct Phase {
    int k = 0;

    static Phase from_power(int k) { return {((k % 4) + 4) % 4}; }
    ExactScalar value() const {
        switch (k) {
            case 0:
                return 1;
            case 1:
                return ExactScalar::i();
            case 2:
                return -1;
            default:
                return -ExactScalar::i();
        }
    }
    friend Phase operator*(Phase a, Phase b) { return from_power(a.k + b.k); }
    friend bool operator==(Phase, Phase) = default;
};

inline std::string to_string(Phase p) {
    static constexpr const char* kNames[] = {"1", "i", "-1", "-i"};
    return kNames[p.k];
}

template <std::size_t N>
class Vector {
   public:
    Vector() = default;
    explicit Vector(std::array<ExactScalar, N> entries) : v_(std::move(entries)) {}

    static Vector basis(std::size_t j) {
        Vector out;
        out.v_[j] = 1;
        return out;
    }

    const ExactScalar& operator[](std::size_t j) const { return v_[j]; }
    ExactScalar& operator[](std::size_t j) { return v_[j]; }
    static constexpr std::size_t size() { return N; }

    bool is_zero() const {
        for (const auto& z : v_) {
            if (!z.is_zero()) return false;
        }
        return true;
    }
    Rational norm2() const {
        Rational out = 0;
        for (const auto& z : v_) out += z.norm2();
        return out;
    }

    friend Vector operator+(const Vector& a, const Vector& b) {
        Vector out;
        for (std::size_t j = 0; j < N; ++j) out.v_[j] = a.v_[j] + b.v_[j];
        return out;
    }
    friend Vector operator*(const ExactScalar& c, const Vector& a) {
        Vector out;
        for (std::size_t j = 0; j < N; ++j) out.v_[j] = c * a.v_[j];
        return out;
    }
    friend bool operator==(const Vector&, const Vector&) = default;

   private:
    std::array<ExactScalar, N> v_{};
};

/// <a|b>, conjugate-linear in the first argument.
template <std::size_t N>
ExactScalar inner(const Vector<N>& a, const Vector<N>& b) {
    ExactScalar out;
    for (std::size_t j = 0; j < N; ++j) out += a[j].conj() * b[j];
    return out;
}

template <std::size_t N>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::initializer_list<std::initializer_list<ExactScalar>> rows) {
        if (rows.size() != N) throw DomainError("wrong row count for exact matrix");
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != N) throw DomainError("wrong column count for exact matrix");
            std::size_t c = 0;
            for (const auto& z : row) m_[r][c++] = z;
            ++r;
        }
    }

    static Matrix identity() {
        Matrix out;
        for (std::size_t j = 0; j < N; ++j) out.m_[j][j] = 1;
        return out;
    }
    static Matrix zero() { return Matrix(); }
    /// |a><b|
    static Matrix outer(const Vector<N>& a, const Vector<N>& b) {
        Matrix out;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) out.m_[r][c] = a[r] * b[c].conj();
        return out;
    }

    static constexpr std::size_t size() { return N; }

    const ExactScalar& operator()(std::size_t r, std::size_t c) const { return m_[r][c]; }
    ExactScalar& operator()(std::size_t r, std::size_t c) { return m_[r][c]; }

    Matrix adjoint() const {
        Matrix out;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) out.m_[c][r] = m_[r][c].conj();
        return out;
    }
    ExactScalar trace() const {
        ExactScalar out;
        for (std::size_t j = 0; j < N; ++j) out += m_[j][j];
        return out;
    }
    bool is_zero() const {
        for (const auto& row : m_)
            for (const auto& z : row)
                if (!z.is_zero()) return false;
        return true;
    }
    bool is_hermitian() const { return *this == adjoint(); }
    bool is_unitary() const { return adjoint() * *this == identity(); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix out;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) out.m_[r][c] = a.m_[r][c] + b.m_[r][c];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix out;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) out.m_[r][c] = a.m_[r][c] - b.m_[r][c];
        return out;
    }
    friend Matrix operator*(const ExactScalar& k, const Matrix& a) {
        Matrix out;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) out.m_[r][c] = k * a.m_[r][c];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix out;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t k = 0; k < N; ++k) {
                if (a.m_[r][k].is_zero()) continue;
                for (std::size_t c = 0; c < N; ++c) out.m_[r][c] += a.m_[r][k] * b.m_[k][c];
            }
        return out;
    }
    friend Vector<N> operator*(const Matrix& a, const Vector<N>& v) {
        Vector<N> out;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) out[r] += a.m_[r][c] * v[c];
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.m_ == b.m_; }

   private:
    std::array<std::array<ExactScalar, N>, N> m_{};
};

using ExactVector = Vector<4>;
using ExactOperator = Matrix<4>;

/// Tr(a b) without forming the product.
template <std::size_t N>
ExactScalar trace_of_product(const Matrix<N>& a, const Matrix<N>& b) {
    ExactScalar out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) out += a(r, c) * b(c, r);
    return out;
}

/// a^k for k >= 0.
template <std::size_t N>
Matrix<N> power(const Matrix<N>& a, int k) {
    Matrix<N> out = Matrix<N>::identity();
    for (int j = 0; j < k; ++j) out = out * a;
    return out;
}

/// U A U^dagger
template <std::size_t N>
Matrix<N> conjugate(const Matrix<N>& u, const Matrix<N>& a) {
    return u * a * u.adjoint();
}

template <std::size_t N, std::size_t M>
Matrix<N * M> kron(const Matrix<N>& a, const Matrix<M>& b) {
    Matrix<N * M> out;
    for (std::size_t r1 = 0; r1 < N; ++r1)
        for (std::size_t c1 = 0; c1 < N; ++c1)
            for (std::size_t r2 = 0; r2 < M; ++r2)
                for (std::size_t c2 = 0; c2 < M; ++c2) out(r1 * M + r2, c1 * M + c2) = a(r1, c1) * b(r2, c2);
    return out;
}

template <std::size_t N, std::size_t M>
Vector<N * M> kron(const Vector<N>& a, const Vector<M>& b) {
    Vector<N * M> out;
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < M; ++k) out[j * M + k] = a[j] * b[k];
    return out;
}

/// Returns i^k when a == i^k * b exactly, nothing when no such power exists.
/// Throws when both operands vanish.
template <std::size_t N>
std::optional<Phase> proportional(const Matrix<N>& a, const Matrix<N>& b) {
    const bool a_zero = a.is_zero();
    const bool b_zero = b.is_zero();
    if (a_zero && b_zero) {
        throw DomainError("proportionality of two zero operators is undefined");
    }
    if (a_zero || b_zero) {
        return std::nullopt;
    }
    for (int k = 0; k < 4; ++k) {
        const Phase p{k};
        if (a == p.value() * b) {
            return p;
        }
    }
    return std::nullopt;
}

/// Determinant by cofactor expansion (sizes here are at most 4).
template <std::size_t N>
ExactScalar determinant(const Matrix<N>& a) {
    if constexpr (N == 1) {
        return a(0, 0);
    } else {
        ExactScalar out;
        for (std::size_t c = 0; c < N; ++c) {
            if (a(0, c).is_zero()) continue;
            Matrix<N - 1> minor;
            for (std::size_t r = 1; r < N; ++r) {
                std::size_t cc = 0;
                for (std::size_t k = 0; k < N; ++k) {
                    if (k == c) continue;
                    minor(r - 1, cc++) = a(r, k);
                }
            }
            const ExactScalar term = a(0, c) * determinant(minor);
            if (c % 2 == 0) {
                out += term;
            } else {
                out -= term;
            }
        }
        return out;
    }
}

}  // namespace qphase4
