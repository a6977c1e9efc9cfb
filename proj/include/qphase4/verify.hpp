#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "qphase4/clifford.hpp"
#include "qphase4/errors.hpp"
#include "qphase4/phasespace.hpp"
#include "qphase4/single_qubit.hpp"
#include "qphase4/state.hpp"
#include "qphase4/symplectic.hpp"
#include "qphase4/wigner.hpp"

namespace qphase4 {

/// Worker count for the sweeps: QPHASE4_THREADS if set and positive,
/// otherwise the hardware concurrency.
inline unsigned verification_threads() {
    if (const char* env = std::getenv("QPHASE4_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(0..count-1) on up to verification_threads() workers. The first
/// exception thrown by any task is rethrown after all workers finish.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const unsigned workers = std::min<unsigned>(verification_threads(), static_cast<unsigned>(count));
    if (workers <= 1) {
        for (std::size_t j = 0; j < count; ++j) body(j);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t j = next++; j < count && !failed; j = next++) {
                try {
                    body(j);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!first) first = std::current_exception();
                    failed = true;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first) std::rethrow_exception(first);
}

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> lines;
};

inline SuiteResult verify_group_suite() {
    SuiteResult out{"group", 0, {}};
    const auto group = enumerate_group();
    std::set<SympMat> distinct(group.begin(), group.end());
    std::set<SympMat> brute;
    for (Gf4 a : kGf4Elements)
        for (Gf4 b : kGf4Elements)
            for (Gf4 c : kGf4Elements)
                for (Gf4 d : kGf4Elements)
                    if (det(Gf4Mat2{a, b, c, d}) == Gf4::one()) brute.insert(SympMat::from_matrix({a, b, c, d}));
    if (group.size() != 60 || distinct.size() != 60 || distinct != brute) {
        throw VerificationFailure("enumerated group is not the set of all 60 det-1 matrices");
    }
    std::set<Decomposition> keys;
    for (const SympMat& l : group) {
        const Decomposition d = decompose(l);
        if (reconstruct(d) != l) throw VerificationFailure("decompose does not round-trip " + to_string(l));
        keys.insert(d);
        ++out.checks;
    }
    if (keys.size() != 60) throw VerificationFailure("decompositions are not pairwise distinct");
    for (const SympMat& a : group)
        for (const SympMat& b : group) {
            if (!distinct.count(a * b)) throw VerificationFailure("group not closed under products");
            ++out.checks;
        }
    out.lines.push_back("60/60 matrices distinct, equal to the brute-force det-1 set");
    out.lines.push_back("60/60 decompositions round-trip, 3600/3600 products closed");
    return out;
}

inline SuiteResult verify_metaplectic_suite() {
    const MetaplecticReport r = verify_metaplectic();
    SuiteResult out{"metaplectic", static_cast<long>(r.entries.size()), {}};
    out.lines.push_back(std::to_string(r.entries.size()) + "/960 signs in {+1,-1} (+1: " + std::to_string(r.plus) +
                        ", -1: " + std::to_string(r.minus) + ")");
    return out;
}

inline SuiteResult verify_rep_suite() {
    const ProjectiveRepReport r = verify_projective_rep();
    SuiteResult out{"rep", r.pairs + r.shear_products + r.sandwich_checks + 2, {}};
    out.lines.push_back(std::to_string(r.pairs) + "/3600 pairs, phases in {1,i,-1,-i} (1: " +
                        std::to_string(r.phase_counts[0]) + ", i: " + std::to_string(r.phase_counts[1]) +
                        ", -1: " + std::to_string(r.phase_counts[2]) + ", -i: " + std::to_string(r.phase_counts[3]) +
                        ")");
    out.lines.push_back("shear products U_{H_x}U_{H_y} = U_{H_x H_y}: " + std::to_string(r.shear_products) + "/16");
    out.lines.push_back("U_R U_{H_w~} U_R = U_{H_w~}: pass; U_R^5 = I: pass");
    out.lines.push_back("U_{H_x} U_R^s U_{H_y} ~ U_{H_x R^s H_y}: " + std::to_string(r.sandwich_checks) +
                        "/80 (x = y = 1: " + std::to_string(r.sandwich_one_one) + "/5)");
    return out;
}

inline SuiteResult verify_mub_suite() {
    SuiteResult out{"mub", 0, {}};
    std::vector<std::pair<MubLabel, ExactVector>> vecs;
    for (int n = 0; n < 5; ++n)
        for (Gf4 k : kGf4Elements) vecs.push_back({{n, k}, mub_vector({n, k})});
    int same = 0, cross = 0;
    for (std::size_t a = 0; a < vecs.size(); ++a) {
        for (std::size_t b = a + 1; b < vecs.size(); ++b) {
            const auto& [la, va] = vecs[a];
            const auto& [lb, vb] = vecs[b];
            const Rational overlap = inner(va, vb).norm2() / (va.norm2() * vb.norm2());
            if (la.n == lb.n) {
                if (overlap != 0) throw VerificationFailure("MUB vectors in one basis are not orthogonal");
                ++same;
            } else {
                if (overlap != Rational(1, 4)) throw VerificationFailure("MUB cross overlap is not 1/4");
                ++cross;
            }
            ++out.checks;
        }
    }
    out.lines.push_back("5 bases, 20 vectors; " + std::to_string(same) + " same-basis pairs orthogonal, " +
                        std::to_string(cross) + " cross pairs with overlap^2 = 1/4");
    return out;
}

inline SuiteResult verify_index_suite() {
    SuiteResult out{"index", 0, {}};
    const auto group = enumerate_group();
    for (const SympMat& l : group) {
        const IndexOperator s = index_operator(l);
        if (!s.is_monomial()) throw VerificationFailure("S_L is not monomial for L = " + to_string(l));
        for (Gf4Vec2 a : kAllPoints) {
            if (point_index(l * a) != s * point_index(a)) {
                throw VerificationFailure("I(L a) != S_L I(a) for L = " + to_string(l) + ", a = " + to_string(a));
            }
            ++out.checks;
        }
    }
    for (const SympMat& a : group)
        for (const SympMat& b : group) {
            if (index_operator(a * b) != index_operator(a) * index_operator(b)) {
                throw VerificationFailure("S_{L1 L2} != S_{L1} S_{L2}");
            }
            ++out.checks;
        }
    out.lines.push_back("960/960 I(L a) = S_L I(a); 3600/3600 S_{L1 L2} = S_{L1} S_{L2}");
    return out;
}

inline SuiteResult verify_shift_suite() {
    SuiteResult out{"shift", 0, {}};
    const WignerFrame& standard = frame(Index{});
    for (const SympMat& l : enumerate_group()) {
        const Index hilbert = operator_index(conjugate(unitary_for(l), standard.origin()));
        if (hilbert != shift_vector(l)) {
            throw VerificationFailure("closed-form shift vector disagrees with conjugation for L = " + to_string(l));
        }
        ++out.checks;
    }
    const auto canon = canonical_shift_vectors();
    if (canon.size() != 12) throw VerificationFailure("expected 12 distinct shift vectors");
    out.lines.push_back("60/60 closed-form f_L equal the index of U_L A_0 U_L^+; 12 distinct shift vectors");
    return out;
}

inline SuiteResult verify_transport_suite() {
    SuiteResult out{"transport", 0, {}};
    const auto group = enumerate_group();
    const auto frames = canonical_shift_vectors();
    const auto states = test_state_suite();
    std::atomic<long> checks{0};
    parallel_for(group.size(), [&](std::size_t j) {
        for (const Index& f : frames)
            for (const DensityState& rho : states) {
                transport(rho, f, group[j]);
                ++checks;
            }
    });
    out.checks = checks;
    out.lines.push_back(std::to_string(out.checks) + "/4320 (L, f, state) transports agree entry-exactly");
    return out;
}

inline SuiteResult verify_marginals_suite() {
    SuiteResult out{"marginals", 0, {}};
    const auto frames = canonical_shift_vectors();
    const auto states = test_state_suite();
    long lines = 0, shifts = 0;
    for (const Index& f : frames)
        for (const DensityState& rho : states) {
            const MarginalReport r = marginal_check(rho, f);
            lines += r.lines_checked;
            shifts += r.displacements_checked;
        }
    out.checks = lines + shifts;
    out.lines.push_back(std::to_string(lines) + " line sums equal Born probabilities; " + std::to_string(shifts) +
                        " displacement covariance checks");
    return out;
}

inline SuiteResult verify_classification_suite() {
    SuiteResult out{"classification", 0, {}};
    for (const Index& f : canonical_shift_vectors()) {
        if (similarity_class(f) != Gf4::zero()) throw VerificationFailure("E(f_L) != 0 for f = " + to_string(f));
        ++out.checks;
    }
    const auto group = enumerate_group();
    const auto indices = all_indices();
    for (const SympMat& l : group) {
        const IndexOperator s = index_operator(l);
        const Index fl = shift_vector(l);
        for (const Index& f : indices) {
            if (similarity_class(s * f + fl) != similarity_class(f)) {
                throw VerificationFailure("E not invariant under f -> S_L f + f_L for L = " + to_string(l) +
                                          ", f = " + to_string(f));
            }
            ++out.checks;
        }
    }
    const CensusReport c = census();
    out.lines.push_back("E(f_L) = 0 for 12/12 shift vectors; E invariant for 61440/61440 (L, f)");
    out.lines.push_back("similarity classes: " + std::to_string(c.classes.size()) +
                        "; E=0 equivalence classes: " + std::to_string(c.classes.at(Gf4::zero()).equivalence_classes));
    return out;
}

inline SuiteResult verify_symmetry_suite() {
    SuiteResult out{"symmetry", 0, {}};
    const auto states = test_state_suite();
    for (const SympMat& l : enumerate_group()) {
        const SymmetryReport r = rotational_symmetry_check(l, states);
        out.checks += r.states_checked + r.intertwined_displacements + 1;
    }
    out.lines.push_back("60/60 R_L of period 5 cycling all striations; V_{R_L} covariance on the test suite");
    return out;
}

inline SuiteResult verify_single_qubit_suite() {
    const single_qubit::Report r = single_qubit::single_qubit_demo();
    SuiteResult out{"single-qubit", r.rotation_points + r.reinterpret_checks + 4, {}};
    out.lines.push_back("U_R: X -> Y -> Z -> X; U_R A_a U_R^+ = A_{Ra} for " + std::to_string(r.rotation_points) +
                        "/4 points");
    out.lines.push_back("reinterpretation under U_F: " + std::to_string(r.reinterpret_checks) + "/16 checks");
    out.lines.push_back("Bloch determinants: U_R " + to_string(r.rotation_bloch_det) + ", U_F " +
                        to_string(r.swap_bloch_det) + ", required X<->Z map " + to_string(r.required_bloch_det));
    return out;
}

inline SuiteResult verify_reconstruction_suite() {
    SuiteResult out{"reconstruction", 0, {}};
    const auto states = test_state_suite();
    for (const Index& f : canonical_shift_vectors()) {
        const WignerFrame& fr = frame(f);
        for (Gf4Vec2 a : kAllPoints)
            for (Gf4Vec2 b : kAllPoints) {
                const ExactScalar t = trace_of_product(fr.at(a), fr.at(b));
                if (t != ExactScalar(a == b ? 4 : 0)) {
                    throw VerificationFailure("Tr(A_a A_b) != 4 delta in frame " + to_string(f));
                }
                ++out.checks;
            }
        for (const DensityState& rho : states) {
            if (!(reconstruct(wigner_table(rho, f)) == rho)) {
                throw VerificationFailure("reconstruction does not round-trip in frame " + to_string(f));
            }
            ++out.checks;
        }
    }
    out.lines.push_back("3072 within-frame trace products = 4 delta; 72/72 reconstructions round-trip");
    return out;
}

inline const std::vector<std::pair<std::string, std::function<SuiteResult()>>>& verification_suites() {
    static const std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites = {
        {"group", verify_group_suite},
        {"metaplectic", verify_metaplectic_suite},
        {"rep", verify_rep_suite},
        {"mub", verify_mub_suite},
        {"index", verify_index_suite},
        {"shift", verify_shift_suite},
        {"transport", verify_transport_suite},
        {"marginals", verify_marginals_suite},
        {"classification", verify_classification_suite},
        {"symmetry", verify_symmetry_suite},
        {"single-qubit", verify_single_qubit_suite},
        {"reconstruction", verify_reconstruction_suite},
    };
    return suites;
}

/// Runs one named suite, or every suite for "all".
inline std::vector<SuiteResult> run_verification(const std::string& scope) {
    std::vector<SuiteResult> out;
    for (const auto& [name, run] : verification_suites()) {
        if (scope == "all" || scope == name) out.push_back(run());
    }
    if (out.empty()) {
        throw ParseError("unknown verification scope '" + scope + "'");
    }
    return out;
}

}  // namespace qphase4
