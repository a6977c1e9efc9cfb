#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qphase4/exact.hpp"
#include "qphase4/gf4.hpp"
#include "qphase4/symplectic.hpp"

namespace qphase4 {

using Qubit = Matrix<2>;

/// Pauli matrix by name index: 0 = I, 1 = X, 2 = Y, 3 = Z.
inline Qubit pauli(int which) {
    const ExactScalar i = ExactScalar::i();
    switch (which) {
        case 0:
            return {{1, 0}, {0, 1}};
        case 1:
            return {{0, 1}, {1, 0}};
        case 2:
            return {{0, -i}, {i, 0}};
        case 3:
            return {{1, 0}, {0, -1}};
        default:
            throw DomainError("no Pauli matrix with index " + std::to_string(which));
    }
}

/// Pauli index of X^q Z^p with XZ written as Y.
constexpr int pauli_index(int q, int p) {
    constexpr int kTable[2][2] = {{0, 3}, {1, 2}};
    return kTable[q & 1][p & 1];
}

/// The pair (j, k) with D_beta = sigma_j (x) sigma_k.
constexpr std::array<int, 2> displacement_paulis(Gf4Vec2 beta) {
    const QubitCoords q = expand(beta.q);
    const QubitCoords p = expand(beta.p);
    return {pauli_index(q.x1, p.x1), pauli_index(q.x2, p.x2)};
}

/// e.g. "X(x)Y" in ASCII or "X⊗Y" in Unicode.
inline std::string displacement_name(Gf4Vec2 beta, TextStyle style = TextStyle::kAscii) {
    static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
    const auto [j, k] = displacement_paulis(beta);
    const std::string tensor = style == TextStyle::kUnicode ? "⊗" : "(x)";
    return std::string(1, kNames[j]) + tensor + std::string(1, kNames[k]);
}

/// Hermitian unitary displacement operator D_beta = sigma_j (x) sigma_k, with
/// the first tensor factor addressed by the w~ coefficient of beta.
inline ExactOperator displacement(Gf4Vec2 beta) {
    const auto [j, k] = displacement_paulis(beta);
    return kron(pauli(j), pauli(k));
}

/// U_{H_x}: the fixed unitaries for the four vertical shears.
inline ExactOperator generator_unitary(Gf4 x) {
    const ExactScalar i = ExactScalar::i();
    switch (x.symbol()) {
        case Gf4::kZero:
            return ExactOperator::identity();
        case Gf4::kOne:
            return {{0, 0, 0, -i}, {0, 0, 1, 0}, {0, 1, 0, 0}, {i, 0, 0, 0}};
        case Gf4::kOmega:
            return {{0, -i, 0, 0}, {i, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
        case Gf4::kOmegaBar:
        default:
            return {{0, 0, -i, 0}, {0, 0, 0, 1}, {i, 0, 0, 0}, {0, 1, 0, 0}};
    }
}

/// U_R, the unitary chosen for the rotation R.
inline ExactOperator rotation_unitary() {
    const ExactScalar i = ExactScalar::i();
    const ExactOperator twice{{i, 1, i, -1}, {i, -1, i, 1}, {i, 1, -i, 1}, {i, -1, -i, -1}};
    return ExactScalar(Rational(1, 2)) * twice;
}

/// U_R^r U_{H_x} U_R^s for a decomposition.
inline ExactOperator unitary_for(const Decomposition& d) {
    const ExactOperator ur = rotation_unitary();
    return power(ur, d.r) * generator_unitary(d.x) * power(ur, d.s);
}

namespace detail {

struct GroupEntry {
    SympMat element;
    Decomposition decomposition;
    ExactOperator unitary;
};

inline const std::map<SympMat, GroupEntry>& group_table() {
    static const std::map<SympMat, GroupEntry> table = [] {
        std::map<SympMat, GroupEntry> out;
        for (const Decomposition& d : group_decompositions()) {
            const SympMat l = reconstruct(d);
            out.emplace(l, GroupEntry{l, d, unitary_for(d)});
        }
        return out;
    }();
    return table;
}

}  // namespace detail

/// U_L, fixed by the canonical decomposition (not merely up to phase).
inline const ExactOperator& unitary_for(const SympMat& l) { return detail::group_table().at(l).unitary; }

inline ExactOperator unitary_for(const Gf4Mat2& m) { return unitary_for(SympMat::from_matrix(m)); }

/// Label (n, k) of a vector in one of the five mutually unbiased bases.
struct MubLabel {
    int n = 0;
    Gf4 k;
    friend constexpr bool operator==(const MubLabel&, const MubLabel&) = default;
    friend constexpr auto operator<=>(const MubLabel&, const MubLabel&) = default;
};

/// |b^(n)_k> = U_R^n D_(k,0) |0000>.
inline ExactVector mub_vector(const MubLabel& label) {
    if (label.n < 0 || label.n > 4) {
        throw DomainError("basis index must be in 0..4, got " + std::to_string(label.n));
    }
    return power(rotation_unitary(), label.n) * (displacement({label.k, Gf4::zero()}) * ExactVector::basis(0));
}

/// Projector |b><b| / <b|b> onto a MUB vector.
inline ExactOperator mub_projector(const MubLabel& label) {
    const ExactVector b = mub_vector(label);
    return ExactScalar(1 / b.norm2()) * ExactOperator::outer(b, b);
}

struct MetaplecticReport {
    struct Entry {
        SympMat l;
        Gf4Vec2 alpha;
        int sign;  // +1 or -1
    };
    std::vector<Entry> entries;
    int plus = 0;
    int minus = 0;
};

/// Checks U_L D_alpha U_L^dagger = +/- D_{L alpha} for all 60 x 16 pairs.
inline MetaplecticReport verify_metaplectic() {
    MetaplecticReport report;
    for (const auto& [l, entry] : detail::group_table()) {
        for (Gf4Vec2 alpha : kAllPoints) {
            const ExactOperator lhs = conjugate(entry.unitary, displacement(alpha));
            const ExactOperator rhs = displacement(l * alpha);
            int sign = 0;
            if (lhs == rhs) {
                sign = 1;
            } else if (lhs == ExactScalar(-1) * rhs) {
                sign = -1;
            } else {
                throw VerificationFailure("U_L D_a U_L^+ is not +/-D_{La} for L = " + to_string(l) +
                                          ", a = " + to_string(alpha));
            }
            report.entries.push_back({l, alpha, sign});
            (sign > 0 ? report.plus : report.minus) += 1;
        }
    }
    return report;
}

struct ProjectiveRepReport {
    int pairs = 0;
    std::array<int, 4> phase_counts{};  // by power of i
    int shear_products = 0;             // U_{H_x}U_{H_y} = U_{H_x H_y}
    bool rotation_fixes_shear = false;  // U_R U_{H_w~} U_R = U_{H_w~}
    bool rotation_order_five = false;   // U_R^5 = I
    int sandwich_checks = 0;            // U_{H_x} U_R^s U_{H_y} ~ U_{H_x R^s H_y}
    int sandwich_one_one = 0;           // the (1,1) cases
};

/// Checks U_{L1} U_{L2} = i^k U_{L1 L2} for all 3600 ordered pairs, plus the
/// special cases the general argument reduces to.
inline ProjectiveRepReport verify_projective_rep() {
    ProjectiveRepReport report;
    const auto& table = detail::group_table();

    for (Gf4 x : kGf4Elements) {
        for (Gf4 y : kGf4Elements) {
            if (generator_unitary(x) * generator_unitary(y) != unitary_for(shear(x) * shear(y))) {
                throw VerificationFailure("U_{H_x}U_{H_y} != U_{H_x H_y} for x = " + to_string(x) +
                                          ", y = " + to_string(y));
            }
            ++report.shear_products;
        }
    }
    const ExactOperator ur = rotation_unitary();
    const ExactOperator uhwb = generator_unitary(Gf4::omega_bar());
    report.rotation_fixes_shear = ur * uhwb * ur == uhwb &&
                                  rotation() * shear(Gf4::omega_bar()) * rotation() == shear(Gf4::omega_bar());
    report.rotation_order_five = power(ur, 5) == ExactOperator::identity() && power(rotation(), 5) == SympMat();
    if (!report.rotation_fixes_shear || !report.rotation_order_five) {
        throw VerificationFailure("rotation identities U_R U_{H_w~} U_R = U_{H_w~} or U_R^5 = I failed");
    }

    for (Gf4 x : kGf4Elements) {
        for (int s = 0; s < 5; ++s) {
            for (Gf4 y : kGf4Elements) {
                const ExactOperator lhs = generator_unitary(x) * power(ur, s) * generator_unitary(y);
                const SympMat l = shear(x) * rotation_power(s) * shear(y);
                if (!proportional(lhs, unitary_for(l))) {
                    throw VerificationFailure("U_{H_x} U_R^s U_{H_y} not proportional to U_{H_x R^s H_y} for x = " +
                                              to_string(x) + ", s = " + std::to_string(s) + ", y = " + to_string(y));
                }
                ++report.sandwich_checks;
                if (x == Gf4::one() && y == Gf4::one()) ++report.sandwich_one_one;
            }
        }
    }

    for (const auto& [l1, e1] : table) {
        for (const auto& [l2, e2] : table) {
            const auto phase = proportional(e1.unitary * e2.unitary, unitary_for(l1 * l2));
            if (!phase) {
                throw VerificationFailure("U_{L1}U_{L2} is not a power of i times U_{L1 L2} for L1 = " +
                                          to_string(l1) + ", L2 = " + to_string(l2));
            }
            ++report.phase_counts[phase->k];
            ++report.pairs;
        }
    }
    return report;
}

/// CNOT with the first qubit as control.
inline ExactOperator cnot() { return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}; }

struct CnotReport {
    std::array<Gf4Vec2, 16> image{};  // image[point_ordinal(beta)] = label of CNOT D_beta CNOT^+
    std::array<int, 16> sign{};
    bool fixes_origin = false;
    bool additive = false;        // over F2: pi(a + b) = pi(a) + pi(b)
    int matching_symplectic = 0;  // group elements inducing the same map
};

/// Conjugation by CNOT permutes the displacement operators, but the induced
/// map on labels is not realised by any of the 60 symplectic matrices.
inline CnotReport cnot_counterexample() {
    CnotReport report;
    const ExactOperator c = cnot();
    for (Gf4Vec2 beta : kAllPoints) {
        const ExactOperator image = conjugate(c, displacement(beta));
        bool found = false;
        for (Gf4Vec2 gamma : kAllPoints) {
            const ExactOperator d = displacement(gamma);
            if (image == d || image == ExactScalar(-1) * d) {
                report.image[point_ordinal(beta)] = gamma;
                report.sign[point_ordinal(beta)] = image == d ? 1 : -1;
                found = true;
                break;
            }
        }
        if (!found) {
            throw VerificationFailure("CNOT does not map D_" + to_string(beta) + " to a displacement");
        }
    }
    report.fixes_origin = report.image[0] == Gf4Vec2{};
    report.additive = true;
    for (Gf4Vec2 a : kAllPoints)
        for (Gf4Vec2 b : kAllPoints)
            if (report.image[point_ordinal(a + b)] != report.image[point_ordinal(a)] + report.image[point_ordinal(b)])
                report.additive = false;
    for (const SympMat& l : enumerate_group()) {
        bool same = true;
        for (Gf4Vec2 beta : kAllPoints) {
            if (l * beta != report.image[point_ordinal(beta)]) {
                same = false;
                break;
            }
        }
        if (same) ++report.matching_symplectic;
    }
    return report;
}

}  // namespace qphase4
