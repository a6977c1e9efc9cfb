#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qphase4/errors.hpp"
#include "qphase4/gf4.hpp"

namespace qphase4 {

/// A unit-determinant 2x2 matrix over GF(4): an element of the 60-element
/// group SL(2, F4), acting on phase-space points from the left.
class SympMat {
   public:
    constexpr SympMat() : m_(Gf4Mat2::identity()) {}

    /// Validates det(m) == 1.
    static SympMat from_matrix(const Gf4Mat2& m) {
        if (det(m) != Gf4::one()) {
            throw DomainError("matrix " + to_string(m) + " is not symplectic (det = " +
                              to_string(det(m), TextStyle::kToken) + ")");
        }
        return SympMat(m);
    }

    constexpr const Gf4Mat2& matrix() const { return m_; }

    friend SympMat operator*(const SympMat& x, const SympMat& y) { return SympMat(x.m_ * y.m_); }
    friend constexpr Gf4Vec2 operator*(const SympMat& x, Gf4Vec2 v) { return x.m_ * v; }

    friend constexpr bool operator==(const SympMat&, const SympMat&) = default;
    friend constexpr auto operator<=>(const SympMat&, const SympMat&) = default;

   private:
    constexpr explicit SympMat(const Gf4Mat2& m) : m_(m) {}
    Gf4Mat2 m_;
};

inline SympMat product(const SympMat& x, const SympMat& y) { return x * y; }

inline SympMat inverse(const SympMat& x) { return SympMat::from_matrix(inverse(x.matrix())); }

inline SympMat transpose(const SympMat& x) { return SympMat::from_matrix(transpose(x.matrix())); }

/// x^k for k >= 0.
inline SympMat power(const SympMat& x, int k) {
    SympMat out;
    for (int i = 0; i < k; ++i) {
        out = out * x;
    }
    return out;
}

/// Vertical shear H_x = [[1,0],[x,1]].
inline SympMat shear(Gf4 x) { return SympMat::from_matrix({Gf4::one(), Gf4::zero(), x, Gf4::one()}); }

/// The order-5 "rotation" R = [[w~,1],[1,0]] that cycles the five striations.
inline SympMat rotation() {
    return SympMat::from_matrix({Gf4::omega_bar(), Gf4::one(), Gf4::one(), Gf4::zero()});
}

/// R^k for any integer k (reduced mod 5).
inline SympMat rotation_power(int k) { return power(rotation(), ((k % 5) + 5) % 5); }

/// L = R^r H_x R^s. Canonical when r == 0 for x in {0, w~}.
struct Decomposition {
    int r = 0;
    Gf4 x;
    int s = 0;

    friend constexpr bool operator==(const Decomposition&, const Decomposition&) = default;
    friend constexpr auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

inline SympMat reconstruct(const Decomposition& d) {
    return rotation_power(d.r) * shear(d.x) * rotation_power(d.s);
}

/// "R^r H_x R^s"
inline std::string to_string(const Decomposition& d, TextStyle style = TextStyle::kAscii) {
    return "R^" + std::to_string(d.r) + " H_" + to_string(d.x, style) + " R^" + std::to_string(d.s);
}

inline std::string to_string(const SympMat& m, TextStyle style = TextStyle::kToken) {
    return to_string(m.matrix(), style);
}

/// All 60 group elements: H_0 R^s, H_w~ R^s, R^r H_1 R^s, R^r H_w R^s, with
/// s (then r) ascending inside each family.
inline std::vector<Decomposition> group_decompositions() {
    std::vector<Decomposition> out;
    out.reserve(60);
    for (Gf4 x : {Gf4::zero(), Gf4::omega_bar()}) {
        for (int s = 0; s < 5; ++s) {
            out.push_back({0, x, s});
        }
    }
    for (Gf4 x : {Gf4::one(), Gf4::omega()}) {
        for (int s = 0; s < 5; ++s) {
            for (int r = 0; r < 5; ++r) {
                out.push_back({r, x, s});
            }
        }
    }
    return out;
}

inline std::vector<SympMat> enumerate_group() {
    std::vector<SympMat> out;
    out.reserve(60);
    for (const auto& d : group_decompositions()) {
        out.push_back(reconstruct(d));
    }
    return out;
}

namespace detail {

// Lookup tables keyed by Slope::code(): 0, 1, w, w~, inf.
inline constexpr std::array<int, 5> kSFromMu = {0, 2, 1, 3, 4};   // keyed by x + mu_p/mu_q
inline constexpr std::array<int, 5> kSFromNu = {2, 3, 0, 1, 4};   // keyed by nu_p/nu_q
inline constexpr std::array<int, 5> kRFromTau = {3, 4, 1, 2, 0};  // keyed by tau_p/tau_q

}  // namespace detail

/// Finds (r, x, s) with L = R^r H_x R^s in canonical form.
inline Decomposition decompose(const SympMat& l) {
    const Gf4Mat2& m = l.matrix();
    const Gf4Mat2 hwb = shear(Gf4::omega_bar()).matrix();
    const Gf4Mat2 mt = transpose(m);
    const Gf4Vec2 e1{Gf4::one(), Gf4::zero()};

    // Tr(L^T H_w~ L H_w~) = x^2.
    const Gf4 x = sqrt(trace(mt * hwb * m * hwb));

    Decomposition d{0, x, 0};
    if (x == Gf4::zero() || x == Gf4::omega_bar()) {
        const Gf4Vec2 mu = m * e1;
        d.s = detail::kSFromMu[(x + slope(mu)).code()];
    } else {
        const Gf4Vec2 offset{Gf4::one(), x};
        const Gf4Vec2 nu = (mt * hwb * m * e1) - offset;
        const Gf4Vec2 tau = (m * hwb * mt * e1) - offset;
        d.s = detail::kSFromNu[slope(nu).code()];
        d.r = detail::kRFromTau[slope(tau).code()];
    }
    if (reconstruct(d) != l) {
        throw std::logic_error("decomposition lookup did not reconstruct " + to_string(l));
    }
    return d;
}

inline Decomposition decompose(const Gf4Mat2& m) { return decompose(SympMat::from_matrix(m)); }

}  // namespace qphase4
