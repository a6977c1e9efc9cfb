#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qphase4/clifford.hpp"
#include "qphase4/errors.hpp"
#include "qphase4/exact.hpp"

namespace qphase4 {

/// Single-qubit Bloch directions used to name product states.
enum class Arrow { kUp, kDown, kRight, kLeft };

/// Unnormalized amplitudes: up (1,0), down (0,1), right (1,1), left (1,-1).
inline Vector<2> arrow_vector(Arrow a) {
    switch (a) {
        case Arrow::kUp:
            return Vector<2>({1, 0});
        case Arrow::kDown:
            return Vector<2>({0, 1});
        case Arrow::kRight:
            return Vector<2>({1, 1});
        case Arrow::kLeft:
        default:
            return Vector<2>({1, -1});
    }
}

inline std::string to_string(Arrow a, TextStyle style = TextStyle::kAscii) {
    static constexpr std::string_view kAscii[] = {"^", "v", ">", "<"};
    static constexpr std::string_view kUnicode[] = {"↑", "↓", "→", "←"};
    const auto j = static_cast<int>(a);
    return std::string(style == TextStyle::kUnicode ? kUnicode[j] : kAscii[j]);
}

inline Arrow parse_arrow(std::string_view name) {
    if (name == "up") return Arrow::kUp;
    if (name == "down") return Arrow::kDown;
    if (name == "right") return Arrow::kRight;
    if (name == "left") return Arrow::kLeft;
    throw ParseError("unknown arrow state '" + std::string(name) + "' (expected up, down, left or right)");
}

inline constexpr std::array<Arrow, 4> kArrows = {Arrow::kUp, Arrow::kDown, Arrow::kRight, Arrow::kLeft};

/// True when a and b are nonzero and span the same ray.
template <std::size_t N>
bool same_ray(const Vector<N>& a, const Vector<N>& b) {
    if (a.is_zero() || b.is_zero()) return false;
    return inner(a, b).norm2() == a.norm2() * b.norm2();
}

/// The product of arrow states spanning the same ray as v, if any.
inline std::optional<std::pair<Arrow, Arrow>> as_arrow_product(const ExactVector& v) {
    for (Arrow a : kArrows)
        for (Arrow b : kArrows)
            if (same_ray(v, kron(arrow_vector(a), arrow_vector(b)))) return std::make_pair(a, b);
    return std::nullopt;
}

/// A two-qubit density matrix: Hermitian, unit trace, positive semidefinite.
class DensityState {
   public:
    /// v v^dagger / <v|v>; rejects the zero vector.
    static DensityState from_vector(const ExactVector& v) {
        if (v.is_zero()) {
            throw InvalidState("the zero vector is not a state");
        }
        return DensityState(ExactScalar(1 / v.norm2()) * ExactOperator::outer(v, v));
    }

    /// Validated construction from an externally supplied matrix.
    static DensityState from_matrix(const ExactOperator& rho) {
        if (!rho.is_hermitian()) {
            throw InvalidState("density matrix is not Hermitian");
        }
        if (rho.trace() != ExactScalar(1)) {
            throw InvalidState("density matrix trace is " + to_string(rho.trace()) + ", not 1");
        }
        // A Hermitian matrix is PSD iff every principal minor is nonnegative.
        for (unsigned mask = 1; mask < 16; ++mask) {
            if (principal_minor(rho, mask).re() < 0) {
                throw InvalidState("density matrix is not positive semidefinite");
            }
        }
        return DensityState(rho);
    }

    static DensityState maximally_mixed() {
        return DensityState(ExactScalar(Rational(1, 4)) * ExactOperator::identity());
    }

    static DensityState product(Arrow first, Arrow second) {
        return from_vector(kron(arrow_vector(first), arrow_vector(second)));
    }

    const ExactOperator& matrix() const { return rho_; }

    /// U rho U^dagger for a unitary U.
    DensityState evolved(const ExactOperator& u) const { return DensityState(conjugate(u, rho_)); }

    /// Tr(rho P)
    Rational expectation(const ExactOperator& p) const {
        const ExactScalar v = trace_of_product(rho_, p);
        if (!v.is_real()) {
            throw std::logic_error("expectation of a Hermitian operator came out complex");
        }
        return v.re();
    }

    /// Born probability of the (unnormalized) vector b.
    Rational probability(const ExactVector& b) const {
        return expectation(ExactScalar(1 / b.norm2()) * ExactOperator::outer(b, b));
    }

    friend bool operator==(const DensityState& a, const DensityState& b) { return a.rho_ == b.rho_; }

   private:
    explicit DensityState(ExactOperator rho) : rho_(std::move(rho)) {}

    static ExactScalar principal_minor(const ExactOperator& a, unsigned mask) {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < 4; ++j)
            if (mask & (1u << j)) idx.push_back(j);
        auto pick = [&](auto& sub) {
            for (std::size_t r = 0; r < idx.size(); ++r)
                for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = a(idx[r], idx[c]);
            return determinant(sub);
        };
        switch (idx.size()) {
            case 1: {
                Matrix<1> s;
                return pick(s);
            }
            case 2: {
                Matrix<2> s;
                return pick(s);
            }
            case 3: {
                Matrix<3> s;
                return pick(s);
            }
            default: {
                Matrix<4> s;
                return pick(s);
            }
        }
    }

    ExactOperator rho_;
};

/// The fixed suite used by the exhaustive sweeps: the four computational
/// basis states, the (1,1,0,0) state and I/4.
inline std::vector<DensityState> test_state_suite() {
    std::vector<DensityState> out;
    for (std::size_t j = 0; j < 4; ++j) out.push_back(DensityState::from_vector(ExactVector::basis(j)));
    out.push_back(DensityState::from_vector(ExactVector({1, 1, 0, 0})));
    out.push_back(DensityState::maximally_mixed());
    return out;
}

}  // namespace qphase4
