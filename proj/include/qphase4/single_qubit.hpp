#pragma once

#include <array>
#include <string>

#include "qphase4/clifford.hpp"
#include "qphase4/errors.hpp"
#include "qphase4/exact.hpp"

namespace qphase4::single_qubit {

/// Point of the 2x2 phase space over F2.
struct BitPoint {
    int q = 0;
    int p = 0;
    friend constexpr bool operator==(BitPoint, BitPoint) = default;
};

inline constexpr std::array<BitPoint, 4> kPoints = {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};

/// 2x2 matrix over F2 acting on (q, p).
struct BitMat {
    int a, b, c, d;
    constexpr BitPoint operator*(BitPoint v) const { return {(a * v.q + b * v.p) & 1, (c * v.q + d * v.p) & 1}; }
};

inline constexpr BitMat kRotation{1, 1, 1, 0};
inline constexpr BitMat kSwap{0, 1, 1, 0};

/// Preimage of a point, by search over the four points.
constexpr BitPoint preimage(const BitMat& m, BitPoint target) {
    for (BitPoint v : kPoints)
        if (m * v == target) return v;
    return {};
}

/// A unitary kept as scaled * (1/sqrt(scale2)), so conjugation stays exact:
/// U A U^dagger = scaled A scaled^dagger / scale2.
struct ScaledUnitary {
    Matrix<2> scaled;
    Rational scale2;

    Matrix<2> conjugate(const Matrix<2>& a) const {
        return ExactScalar(1 / scale2) * (scaled * a * scaled.adjoint());
    }
    bool is_unitary() const {
        return scaled.adjoint() * scaled == ExactScalar(scale2) * Matrix<2>::identity();
    }
};

/// U_R up to the global phase e^{i pi/4}: [[1,-i],[1,i]] / sqrt(2).
inline ScaledUnitary rotation_unitary() {
    const ExactScalar i = ExactScalar::i();
    return {{{1, -i}, {1, i}}, 2};
}

/// U_F = (Z - X) / sqrt(2).
inline ScaledUnitary swap_unitary() { return {pauli(3) - pauli(1), 2}; }

/// Origin operator (I + s(X + Y + Z)) / 2 with s = +1 (standard) or -1 (tilde).
inline Matrix<2> origin_operator(int sign) {
    return ExactScalar(Rational(1, 2)) *
           (pauli(0) + ExactScalar(sign) * (pauli(1) + pauli(2) + pauli(3)));
}

/// A_(1,0) = X A X, A_(1,1) = Y A Y, A_(0,1) = Z A Z.
inline Matrix<2> phase_point(BitPoint a, int sign) {
    const int which = a.q ? (a.p ? 2 : 1) : (a.p ? 3 : 0);
    const Matrix<2> s = pauli(which);
    return s * origin_operator(sign) * s;
}

/// W_a(rho) = Tr(A_a rho) / 2; rho may be any operator (linear extension).
inline ExactScalar wigner_value(BitPoint a, const Matrix<2>& rho, int sign) {
    return trace_of_product(phase_point(a, sign), rho) / ExactScalar(2);
}

/// Bloch-sphere matrix of a conjugation map: M_jk = Tr(s_j U s_k U^dagger) / 2.
template <typename Conj>
Matrix<3> bloch_map(Conj&& conj) {
    Matrix<3> out;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            out(j, k) = trace_of_product(pauli(j + 1), conj(pauli(k + 1))) / ExactScalar(2);
    return out;
}

struct Report {
    bool xyz_cycle = false;
    int rotation_points = 0;      // U_R A_a U_R^+ = A_{Ra}
    int reinterpret_checks = 0;   // Wtilde_a(U_F rho U_F^+) = W_{F^-1 a}(rho)
    Rational rotation_bloch_det;  // +1
    Rational swap_bloch_det;      // +1
    Rational required_bloch_det;  // -1: X <-> Z with Y fixed
};

/// Single-qubit version of the reinterpretation idea: U_R permutes the phase
/// point operators, while U_F only does so after switching to the tilde frame.
inline Report single_qubit_demo() {
    Report report;
    const ScaledUnitary ur = rotation_unitary();
    const ScaledUnitary uf = swap_unitary();
    if (!ur.is_unitary() || !uf.is_unitary()) {
        throw VerificationFailure("single-qubit U_R or U_F is not unitary");
    }

    report.xyz_cycle = ur.conjugate(pauli(1)) == pauli(2) && ur.conjugate(pauli(2)) == pauli(3) &&
                       ur.conjugate(pauli(3)) == pauli(1);
    if (!report.xyz_cycle) {
        throw VerificationFailure("U_R does not cycle X -> Y -> Z -> X");
    }

    for (BitPoint a : kPoints) {
        if (ur.conjugate(phase_point(a, +1)) != phase_point(kRotation * a, +1)) {
            throw VerificationFailure("U_R A_a U_R^+ != A_{Ra} at a = (" + std::to_string(a.q) + "," +
                                      std::to_string(a.p) + ")");
        }
        ++report.rotation_points;
    }

    // Hermitian operator basis I, X, Y, Z; the identity is linear in rho.
    for (int which = 0; which < 4; ++which) {
        const Matrix<2> rho = pauli(which);
        const Matrix<2> moved = uf.conjugate(rho);
        for (BitPoint a : kPoints) {
            if (wigner_value(a, moved, -1) != wigner_value(preimage(kSwap, a), rho, +1)) {
                throw VerificationFailure("reinterpretation identity fails for basis operator " +
                                          std::to_string(which));
            }
            ++report.reinterpret_checks;
        }
    }

    report.rotation_bloch_det = determinant(bloch_map([&](const Matrix<2>& a) { return ur.conjugate(a); })).re();
    report.swap_bloch_det = determinant(bloch_map([&](const Matrix<2>& a) { return uf.conjugate(a); })).re();
    Matrix<3> required;
    required(0, 2) = 1;  // Z -> X
    required(1, 1) = 1;  // Y -> Y
    required(2, 0) = 1;  // X -> Z
    report.required_bloch_det = determinant(required).re();
    if (report.rotation_bloch_det != 1 || report.swap_bloch_det != 1 || report.required_bloch_det != -1) {
        throw VerificationFailure("Bloch determinant obstruction check failed");
    }
    return report;
}

}  // namespace qphase4::single_qubit
