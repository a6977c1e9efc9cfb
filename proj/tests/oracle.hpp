#pragma once

// Reference implementations used to check the library. Nothing here calls
// library arithmetic: GF(4) is done with polynomials over F2, and operators
// use dyadic Gaussian integers with hand-entered matrices.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qphase4/exact.hpp"
#include "qphase4/gf4.hpp"
#include "qphase4/phasespace.hpp"
#include "qphase4/symplectic.hpp"

namespace oracle {

// ---- GF(4) as F2[x] / (x^2 + x + 1): 0, 1, w = x (2), w~ = x + 1 (3) ----

inline int add(int a, int b) { return a ^ b; }

inline int mul(int a, int b) {
    int r = 0;
    for (int bit = 0; bit < 2; ++bit)
        if (b & (1 << bit)) r ^= a << bit;
    if (r & 4) r ^= 0b111;
    return r;
}

inline int inv(int a) {
    for (int b = 1; b < 4; ++b)
        if (mul(a, b) == 1) return b;
    throw std::domain_error("zero has no inverse");
}

inline constexpr int W = 2;   // omega
inline constexpr int WB = 3;  // omega bar

struct Pt {
    int q = 0, p = 0;
    bool operator==(const Pt&) const = default;
};

struct M2 {
    int a, b, c, d;
    bool operator==(const M2&) const = default;
};

inline Pt apply(const M2& m, Pt v) { return {add(mul(m.a, v.q), mul(m.b, v.p)), add(mul(m.c, v.q), mul(m.d, v.p))}; }
inline M2 mul(const M2& x, const M2& y) {
    return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
            add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}
inline int det(const M2& m) { return add(mul(m.a, m.d), mul(m.b, m.c)); }
inline M2 identity() { return {1, 0, 0, 1}; }
inline M2 rot() { return {WB, 1, 1, 0}; }
inline M2 shear(int x) { return {1, 0, x, 1}; }
inline M2 pow(const M2& m, int k) {
    M2 out = identity();
    for (int j = 0; j < k; ++j) out = mul(out, m);
    return out;
}

inline M2 from(const qphase4::SympMat& l) {
    const auto& m = l.matrix();
    return {m.a.code(), m.b.code(), m.c.code(), m.d.code()};
}
inline Pt from(qphase4::Gf4Vec2 v) { return {v.q.code(), v.p.code()}; }
inline qphase4::Gf4 to_gf4(int c) { return qphase4::Gf4::from_code(c); }

inline std::vector<Pt> all_points() {
    std::vector<Pt> out;
    for (int q = 0; q < 4; ++q)
        for (int p = 0; p < 4; ++p) out.push_back({q, p});
    return out;
}

/// Coefficients (x1, x2) with x = x1 w~ + x2 w.
inline std::pair<int, int> bits(int x) {
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            if (add(mul(x1, WB), mul(x2, W)) == x) return {x1, x2};
    throw std::logic_error("unreachable");
}

/// k of the line of striation n through a, where line (n, k) = R^n {(k, p)}.
inline int line_of(Pt a, int n) {
    for (int k = 0; k < 4; ++k)
        for (int p = 0; p < 4; ++p)
            if (apply(pow(rot(), n), {k, p}) == a) return k;
    throw std::logic_error("point on no line");
}

// ---- Dyadic Gaussian rationals (re + i im) / 2^e ----

struct Dz {
    long long re = 0, im = 0;
    int e = 0;

    Dz() = default;
    Dz(long long r, long long i = 0, int ex = 0) : re(r), im(i), e(ex) { normalize(); }

    void normalize() {
        while (e > 0 && re % 2 == 0 && im % 2 == 0) {
            re /= 2;
            im /= 2;
            --e;
        }
        if (re == 0 && im == 0) e = 0;
    }
    Dz conj() const { return Dz(re, -im, e); }
    bool is_zero() const { return re == 0 && im == 0; }

    friend Dz operator+(Dz a, Dz b) {
        while (a.e < b.e) a = Dz{a.re * 2, a.im * 2, a.e + 1, 0};
        while (b.e < a.e) b = Dz{b.re * 2, b.im * 2, b.e + 1, 0};
        return Dz(a.re + b.re, a.im + b.im, a.e);
    }
    friend Dz operator-(Dz a) { return Dz(-a.re, -a.im, a.e); }
    friend Dz operator-(Dz a, Dz b) { return a + (-b); }
    friend Dz operator*(Dz a, Dz b) { return Dz(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, a.e + b.e); }
    friend bool operator==(const Dz& a, const Dz& b) { return a.re == b.re && a.im == b.im && a.e == b.e; }

   private:
    Dz(long long r, long long i, int ex, int) : re(r), im(i), e(ex) {}
};

inline const Dz kI{0, 1};

inline Dz from(const qphase4::ExactScalar& z) {
    auto part = [](const qphase4::Rational& x, long long& num, int& e) {
        auto den = boost::multiprecision::denominator(x);
        num = boost::multiprecision::numerator(x).convert_to<long long>();
        e = 0;
        while (den > 1) {
            if (den % 2 != 0) throw std::domain_error("not dyadic");
            den /= 2;
            ++e;
        }
    };
    long long r, i;
    int er, ei;
    part(z.re(), r, er);
    part(z.im(), i, ei);
    return Dz(r, 0, er) + Dz(0, i, ei);
}

inline qphase4::Rational real_rational(const Dz& z) {
    if (z.im != 0) throw std::domain_error("not real");
    return qphase4::Rational(z.re) / qphase4::Rational(boost::multiprecision::cpp_int(1) << z.e);
}

using Op = std::array<std::array<Dz, 4>, 4>;
using Vec = std::array<Dz, 4>;

inline Op zero_op() { return {}; }
inline Op eye() {
    Op out{};
    for (int j = 0; j < 4; ++j) out[j][j] = Dz(1);
    return out;
}
inline Op operator*(const Op& a, const Op& b) {
    Op out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int k = 0; k < 4; ++k) out[r][c] = out[r][c] + a[r][k] * b[k][c];
    return out;
}
inline Op operator+(const Op& a, const Op& b) {
    Op out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = a[r][c] + b[r][c];
    return out;
}
inline Op operator*(Dz s, const Op& a) {
    Op out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = s * a[r][c];
    return out;
}
inline Vec operator*(const Op& a, const Vec& v) {
    Vec out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] = out[r] + a[r][c] * v[c];
    return out;
}
inline Op dagger(const Op& a) {
    Op out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = a[c][r].conj();
    return out;
}
inline Dz trace(const Op& a) {
    Dz t;
    for (int j = 0; j < 4; ++j) t = t + a[j][j];
    return t;
}
inline Op outer(const Vec& a, const Vec& b) {
    Op out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = a[r] * b[c].conj();
    return out;
}
inline Dz inner(const Vec& a, const Vec& b) {
    Dz t;
    for (int j = 0; j < 4; ++j) t = t + a[j].conj() * b[j];
    return t;
}

inline Op from(const qphase4::ExactOperator& a) {
    Op out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = from(a(r, c));
    return out;
}

// Single-qubit matrices, then tensor products with the first factor most significant.
using Op2 = std::array<std::array<Dz, 2>, 2>;
inline Op2 op2_mul(const Op2& a, const Op2& b) {
    Op2 out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
    return out;
}
inline const Op2 kX2{{{Dz(0), Dz(1)}, {Dz(1), Dz(0)}}};
inline const Op2 kZ2{{{Dz(1), Dz(0)}, {Dz(0), Dz(-1)}}};
inline const Op2 kI2{{{Dz(1), Dz(0)}, {Dz(0), Dz(1)}}};

inline Op kron(const Op2& a, const Op2& b) {
    Op out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = a[r / 2][c / 2] * b[r % 2][c % 2];
    return out;
}

/// X^q Z^p for one qubit, times i when both are present so that XZ becomes Y.
inline Op2 qubit_displacement(int q, int p) {
    Op2 out = op2_mul(q ? kX2 : kI2, p ? kZ2 : kI2);
    if (q && p)
        for (auto& row : out)
            for (auto& x : row) x = kI * x;
    return out;
}

inline Op displacement(Pt beta) {
    const auto [q1, q2] = bits(beta.q);
    const auto [p1, p2] = bits(beta.p);
    return kron(qubit_displacement(q1, p1), qubit_displacement(q2, p2));
}

/// The generator unitaries, entered by hand.
inline Op u_shear(int x) {
    const Dz o(0), l(1), i = kI, mi = -kI;
    switch (x) {
        case 0:
            return eye();
        case 1:
            return {{{o, o, o, mi}, {o, o, l, o}, {o, l, o, o}, {i, o, o, o}}};
        case W:
            return {{{o, mi, o, o}, {i, o, o, o}, {o, o, o, l}, {o, o, l, o}}};
        default:
            return {{{o, o, mi, o}, {o, o, o, l}, {i, o, o, o}, {o, l, o, o}}};
    }
}

inline Op u_rot() {
    const Dz h(1, 0, 1), hi(0, 1, 1);
    return {{{hi, h, hi, -h}, {hi, -h, hi, h}, {hi, h, -hi, h}, {hi, -h, -hi, -h}}};
}

inline Op op_pow(const Op& a, int k) {
    Op out = eye();
    for (int j = 0; j < k; ++j) out = out * a;
    return out;
}

inline Vec basis0() { return {Dz(1), Dz(0), Dz(0), Dz(0)}; }

/// b^(n)_k = U_R^n D_(k,0) e_0; already normalized.
inline Vec mub(int n, int k) { return op_pow(u_rot(), n) * (displacement({k, 0}) * basis0()); }

/// Origin operator of frame f, sum of five projectors minus I.
inline Op origin(const std::array<int, 5>& f) {
    Op a = Dz(-1) * eye();
    for (int n = 0; n < 5; ++n) {
        const Vec b = mub(n, f[n]);
        a = a + outer(b, b);
    }
    return a;
}

inline std::array<int, 5> from(const qphase4::Index& f) {
    std::array<int, 5> out{};
    for (int n = 0; n < 5; ++n) out[n] = f[n].code();
    return out;
}

/// Sixteen Wigner values W_a = Tr(D_a A_0 D_a rho) / 4, keyed by 4 q + p.
inline std::array<Dz, 16> wigner(const Op& rho, const std::array<int, 5>& f) {
    const Op a0 = origin(f);
    std::array<Dz, 16> out{};
    for (Pt a : all_points()) {
        const Op d = displacement(a);
        out[4 * a.q + a.p] = Dz(1, 0, 2) * trace(d * a0 * d * rho);
    }
    return out;
}

/// Density matrix v v^dagger / <v|v> for vectors with <v|v> a power of two.
inline Op density(const Vec& v) {
    const Dz n = inner(v, v);
    if (n.im != 0 || n.re <= 0) throw std::domain_error("bad norm");
    long long r = n.re;
    int m = 0;
    while (r % 2 == 0) {
        r /= 2;
        ++m;
    }
    if (r != 1) throw std::domain_error("norm is not a power of two");
    const int shift = n.e - m;  // 1 / <v|v> = 2^shift
    const Dz scale = shift >= 0 ? Dz(1LL << shift) : Dz(1, 0, -shift);
    return scale * outer(v, v);
}

}  // namespace oracle
