#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "qphase4/clifford.hpp"
#include "qphase4/errors.hpp"
#include "qphase4/exact.hpp"
#include "qphase4/phasespace.hpp"
#include "qphase4/state.hpp"
#include "qphase4/symplectic.hpp"

namespace qphase4 {

/// The f-Wigner function's phase point operators.
///
/// The origin operator is sum_n |b^(n)_{f_n}><b^(n)_{f_n}| - I and every other
/// point carries A_a = D_a A_0 D_a^dagger. f = 0 is the standard frame.
class WignerFrame {
   public:
    explicit WignerFrame(const Index& f) : f_(f) {
        origin_ = ExactScalar(-1) * ExactOperator::identity();
        for (int n = 0; n < 5; ++n) origin_ = origin_ + mub_projector({n, f[n]});
        for (Gf4Vec2 a : kAllPoints) {
            const ExactOperator d = displacement(a);
            points_[point_ordinal(a)] = d * origin_ * d.adjoint();
        }
    }

    const Index& shift() const { return f_; }
    const ExactOperator& origin() const { return origin_; }
    const ExactOperator& at(Gf4Vec2 a) const { return points_[point_ordinal(a)]; }

    /// The MUB vector whose probability the line's Wigner sum reproduces.
    MubLabel line_label(const Line& line) const { return {line.n, line.k + f_[line.n]}; }

   private:
    Index f_;
    ExactOperator origin_;
    std::array<ExactOperator, 16> points_;
};

/// Shared, lazily built frames. Safe for concurrent use.
inline const WignerFrame& frame(const Index& f) {
    static std::mutex mu;
    static std::map<Index, std::unique_ptr<WignerFrame>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(f);
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<WignerFrame>(f);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(f, std::move(built));
    return *it->second;
}

/// Index of a phase point operator: k_m is the unique j whose MUB vector
/// b^(m)_j has expectation 1 in A (all the others give 0).
inline Index operator_index(const ExactOperator& a) {
    Index out;
    for (int m = 0; m < 5; ++m) {
        int hits = 0;
        for (Gf4 j : kGf4Elements) {
            const ExactVector b = mub_vector({m, j});
            const ExactScalar overlap = inner(b, a * b) / ExactScalar(b.norm2());
            if (overlap == ExactScalar(1)) {
                out[m] = j;
                ++hits;
            } else if (!overlap.is_zero()) {
                hits = -1;
                break;
            }
        }
        if (hits != 1) {
            throw DomainError("not a phase point operator (striation " + std::to_string(m) + ")");
        }
    }
    return out;
}

/// Sixteen exact Wigner values with the frame they were computed in.
struct WignerTable {
    Index frame;
    std::array<Rational, 16> values;

    const Rational& at(Gf4Vec2 a) const { return values[point_ordinal(a)]; }
    Rational& at(Gf4Vec2 a) { return values[point_ordinal(a)]; }

    Rational sum() const {
        Rational out = 0;
        for (const auto& v : values) out += v;
        return out;
    }
    Rational line_sum(const Line& line) const {
        Rational out = 0;
        for (Gf4Vec2 a : line_points(line)) out += at(a);
        return out;
    }

    friend bool operator==(const WignerTable&, const WignerTable&) = default;
};

/// W^f_a(rho) = Tr(A^f_a rho) / 4.
inline WignerTable wigner_table(const DensityState& rho, const Index& f) {
    const WignerFrame& fr = frame(f);
    WignerTable out{f, {}};
    for (Gf4Vec2 a : kAllPoints) out.at(a) = rho.expectation(fr.at(a)) / 4;
    return out;
}

/// rho = sum_a W_a A^f_a.
inline DensityState reconstruct(const WignerTable& table) {
    const WignerFrame& fr = frame(table.frame);
    ExactOperator rho;
    for (Gf4Vec2 a : kAllPoints) rho = rho + ExactScalar(table.at(a)) * fr.at(a);
    try {
        return DensityState::from_matrix(rho);
    } catch (const InvalidState& e) {
        throw InvalidState(std::string("reconstructed operator is not a state: ") + e.what());
    }
}

/// Values moved by a -> L a: out[L a] = in[a].
inline WignerTable move_values(const WignerTable& table, const SympMat& l, const Index& new_frame) {
    WignerTable out{new_frame, {}};
    for (Gf4Vec2 a : kAllPoints) out.at(l * a) = table.at(a);
    return out;
}

struct TransportResult {
    DensityState state;
    Index frame;
    WignerTable table;
};

/// Performs U_L on rho held in frame f. The new frame is S_L f + f_L, and the
/// returned table is computed directly from U_L rho U_L^dagger; it must equal
/// the old values moved by L.
inline TransportResult transport(const DensityState& rho, const Index& f, const SympMat& l) {
    const DensityState moved_state = rho.evolved(unitary_for(l));
    const Index g = compose_frame(f, l);
    WignerTable direct = wigner_table(moved_state, g);
    const WignerTable moved = move_values(wigner_table(rho, f), l, g);
    if (direct != moved) {
        throw VerificationFailure("transport mismatch for L = " + to_string(l) + ", f = " + to_string(f));
    }
    return {moved_state, g, std::move(direct)};
}

/// Performs the displacement D_beta; the frame is unchanged and values move
/// by a -> a + beta.
inline TransportResult displace(const DensityState& rho, const Index& f, Gf4Vec2 beta) {
    const DensityState moved_state = rho.evolved(displacement(beta));
    WignerTable direct = wigner_table(moved_state, f);
    const WignerTable old = wigner_table(rho, f);
    for (Gf4Vec2 a : kAllPoints) {
        if (direct.at(a) != old.at(a - beta)) {
            throw VerificationFailure("displacement covariance fails for beta = " + to_string(beta) +
                                      ", f = " + to_string(f));
        }
    }
    return {moved_state, f, std::move(direct)};
}

/// E(f) = r^T f + f^T M f, labelling the similarity class of the f-frame.
inline Gf4 similarity_class(const Index& f) {
    const Gf4 w = Gf4::omega();
    const Gf4 o = Gf4::zero();
    const Gf4 l = Gf4::one();
    static const std::array<std::array<Gf4, 5>, 5> kM = {{
        {o, l, w, o, o},
        {o, o, l, w, o},
        {o, o, o, l, w},
        {w, o, o, o, l},
        {l, w, o, o, o},
    }};
    Gf4 out;
    for (int n = 0; n < 5; ++n) out += w * f[n];
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) out += f[r] * kM[r][c] * f[c];
    return out;
}

/// All 1024 indices in lexicographic order.
inline std::vector<Index> all_indices() {
    std::vector<Index> out;
    out.reserve(1024);
    for (int code = 0; code < 1024; ++code) {
        Index f;
        for (int n = 0; n < 5; ++n) f[n] = Gf4::from_code((code >> (2 * (4 - n))) & 3);
        out.push_back(f);
    }
    return out;
}

/// The 16 frames reachable from f by displacements.
inline std::set<Index> displacement_orbit(const Index& f) {
    std::set<Index> out;
    for (Gf4Vec2 beta : kAllPoints) out.insert(displace_index(f, beta));
    return out;
}

struct CensusReport {
    struct ClassSummary {
        int members = 0;
        int equivalence_classes = 0;
        std::set<int> orbit_sizes;
    };
    int total = 0;
    std::map<Gf4, ClassSummary> classes;  // keyed by E
};

/// Groups the 1024 Wigner definitions into displacement-equivalence classes
/// and similarity classes.
inline CensusReport census() {
    CensusReport report;
    std::set<Index> seen;
    for (const Index& f : all_indices()) {
        ++report.total;
        const Gf4 e = similarity_class(f);
        auto& cls = report.classes[e];
        ++cls.members;
        if (seen.count(f)) continue;
        const auto orbit = displacement_orbit(f);
        for (const Index& g : orbit) {
            if (similarity_class(g) != e) {
                throw VerificationFailure("similarity class is not constant on the displacement orbit of " +
                                          to_string(f));
            }
        }
        seen.insert(orbit.begin(), orbit.end());
        ++cls.equivalence_classes;
        cls.orbit_sizes.insert(static_cast<int>(orbit.size()));
    }
    const auto& zero = report.classes[Gf4::zero()];
    if (zero.equivalence_classes != 12 || zero.orbit_sizes != std::set<int>{16}) {
        throw VerificationFailure("the E = 0 class does not split into 12 equivalence classes of 16");
    }
    return report;
}

struct SymmetryReport {
    SympMat rotation;  // R_L = L R L^-1
    int period = 0;
    std::vector<int> striation_cycle;  // images of striation 0 under R_L
    int intertwined_displacements = 0;
    int states_checked = 0;
};

/// Rotational covariance of the f_L frame under R_L = L R L^-1 and
/// V = U_L U_R U_L^dagger.
inline SymmetryReport rotational_symmetry_check(const SympMat& l, const std::vector<DensityState>& states) {
    SymmetryReport report;
    report.rotation = l * rotation() * inverse(l);
    const ExactOperator& ul = unitary_for(l);
    const ExactOperator v = ul * rotation_unitary() * ul.adjoint();
    const Index f = shift_vector(l);
    const SympMat back = inverse(report.rotation);

    for (int k = 1; k <= 5; ++k) {
        if (power(report.rotation, k) == SympMat()) {
            report.period = k;
            break;
        }
    }
    std::set<int> visited;
    int n = 0;
    const IndexOperator s = index_operator(report.rotation);
    for (int j = 0; j < 5; ++j) {
        report.striation_cycle.push_back(n);
        visited.insert(n);
        n = s.image_of(n);
    }
    if (report.period != 5 || visited.size() != 5) {
        throw VerificationFailure("R_L does not have period 5 cycling all striations for L = " + to_string(l));
    }

    for (Gf4Vec2 beta : kAllPoints) {
        if (!proportional(conjugate(v, displacement(beta)), displacement(report.rotation * beta))) {
            throw VerificationFailure("V D_b V^+ not proportional to D_{R_L b} for L = " + to_string(l));
        }
        ++report.intertwined_displacements;
    }

    for (std::size_t j = 0; j < states.size(); ++j) {
        const WignerTable before = wigner_table(states[j], f);
        const WignerTable after = wigner_table(states[j].evolved(v), f);
        for (Gf4Vec2 a : kAllPoints) {
            if (after.at(a) != before.at(back * a)) {
                throw VerificationFailure("rotational covariance fails for L = " + to_string(l) + ", state #" +
                                          std::to_string(j) + ", point " + to_string(a));
            }
        }
        ++report.states_checked;
    }
    return report;
}

struct MarginalReport {
    int lines_checked = 0;
    int displacements_checked = 0;
};

/// Line sums equal Born probabilities of the labelled MUB vectors, and the
/// table is covariant under all 16 displacements.
inline MarginalReport marginal_check(const DensityState& rho, const Index& f) {
    MarginalReport report;
    const WignerTable table = wigner_table(rho, f);
    const WignerFrame& fr = frame(f);
    for (const Line& line : all_lines()) {
        const Rational born = rho.probability(mub_vector(fr.line_label(line)));
        if (table.line_sum(line) != born) {
            throw VerificationFailure("line sum differs from Born probability on line (" + std::to_string(line.n) +
                                      ", " + to_string(line.k) + ") in frame " + to_string(f));
        }
        ++report.lines_checked;
    }
    for (Gf4Vec2 beta : kAllPoints) {
        displace(rho, f, beta);
        ++report.displacements_checked;
    }
    return report;
}

}  // namespace qphase4
