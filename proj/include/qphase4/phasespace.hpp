#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qphase4/errors.hpp"
#include "qphase4/gf4.hpp"
#include "qphase4/symplectic.hpp"

namespace qphase4 {

/// Five-component GF(4) column vector: one line (or MUB vector) per striation.
struct Index {
    std::array<Gf4, 5> k{};

    constexpr Gf4 operator[](int n) const { return k[n]; }
    constexpr Gf4& operator[](int n) { return k[n]; }

    friend constexpr Index operator+(const Index& a, const Index& b) {
        Index out;
        for (int n = 0; n < 5; ++n) out.k[n] = a.k[n] + b.k[n];
        return out;
    }
    friend constexpr Index operator*(Gf4 c, const Index& a) {
        Index out;
        for (int n = 0; n < 5; ++n) out.k[n] = c * a.k[n];
        return out;
    }
    constexpr bool is_zero() const {
        for (Gf4 x : k)
            if (!x.is_zero()) return false;
        return true;
    }

    friend constexpr bool operator==(const Index&, const Index&) = default;
    friend constexpr auto operator<=>(const Index&, const Index&) = default;
};

/// "(0, w, 1, 0, 1)"
inline std::string to_string(const Index& f, TextStyle style = TextStyle::kAscii) {
    std::string out = "(";
    for (int n = 0; n < 5; ++n) {
        if (n) out += ", ";
        out += to_string(f[n], style);
    }
    return out + ")";
}

/// Parses "f0,f1,f2,f3,f4" with GF(4) tokens; brackets and spaces are ignored.
inline Index parse_index(std::string_view text) {
    std::vector<std::string> tokens(1);
    for (char c : text) {
        if (c == ',') {
            tokens.emplace_back();
        } else if (c != ' ' && c != '\t' && c != '[' && c != ']' && c != '(' && c != ')') {
            tokens.back() += c;
        }
    }
    if (tokens.size() != 5) {
        throw ParseError("an index needs 5 comma-separated components, got '" + std::string(text) + "'");
    }
    Index out;
    for (int n = 0; n < 5; ++n) out[n] = parse_gf4(tokens[n]);
    return out;
}

/// Line lambda^(n)_k = R^n applied to the vertical line q = k.
struct Line {
    int n = 0;
    Gf4 k;
    friend constexpr bool operator==(const Line&, const Line&) = default;
    friend constexpr auto operator<=>(const Line&, const Line&) = default;
};

inline std::array<Line, 20> all_lines() {
    std::array<Line, 20> out{};
    int j = 0;
    for (int n = 0; n < 5; ++n)
        for (Gf4 k : kGf4Elements) out[j++] = {n, k};
    return out;
}

inline std::array<Gf4Vec2, 4> line_points(const Line& line) {
    if (line.n < 0 || line.n > 4) {
        throw DomainError("striation index must be in 0..4, got " + std::to_string(line.n));
    }
    const SympMat rn = rotation_power(line.n);
    std::array<Gf4Vec2, 4> out{};
    for (int j = 0; j < 4; ++j) out[j] = rn * Gf4Vec2{line.k, kGf4Elements[j]};
    return out;
}

namespace detail {

// membership[point_ordinal(alpha)][n] = k of the line of striation n through alpha.
inline const std::array<std::array<Gf4, 5>, 16>& membership_table() {
    static const auto table = [] {
        std::array<std::array<Gf4, 5>, 16> out{};
        std::array<std::array<int, 5>, 16> hits{};
        for (const Line& line : all_lines()) {
            for (Gf4Vec2 a : line_points(line)) {
                out[point_ordinal(a)][line.n] = line.k;
                ++hits[point_ordinal(a)][line.n];
            }
        }
        for (const auto& row : hits)
            for (int h : row)
                if (h != 1) throw std::logic_error("striations do not partition the phase space");
        return out;
    }();
    return table;
}

}  // namespace detail

/// The line of striation n through alpha.
inline Line line_through(Gf4Vec2 alpha, int n) { return {n, detail::membership_table()[point_ordinal(alpha)][n]}; }

inline bool contains(const Line& line, Gf4Vec2 alpha) { return line_through(alpha, line.n) == line; }

/// Index of a point: component n is the k of the striation-n line through it.
inline Index point_index(Gf4Vec2 alpha) {
    Index out;
    out.k = detail::membership_table()[point_ordinal(alpha)];
    return out;
}

/// Q and P with (R^-n beta)_q = beta_q Q_n + beta_p P_n.
inline std::pair<Index, Index> qp_vectors() {
    Index q, p;
    for (int n = 0; n < 5; ++n) {
        const SympMat back = rotation_power(-n);
        q[n] = (back * Gf4Vec2{Gf4::one(), Gf4::zero()}).q;
        p[n] = (back * Gf4Vec2{Gf4::zero(), Gf4::one()}).q;
    }
    return {q, p};
}

/// beta_q Q + beta_p P
inline Index displacement_index(Gf4Vec2 beta) {
    static const auto qp = qp_vectors();
    return beta.q * qp.first + beta.p * qp.second;
}

inline Index displace_index(const Index& i, Gf4Vec2 beta) { return i + displacement_index(beta); }

/// Striation whose ray is spanned by the nonzero vector v.
inline int striation_of_direction(Gf4Vec2 v) {
    if (v.is_zero()) {
        throw DomainError("the zero vector spans no ray");
    }
    for (int n = 0; n < 5; ++n) {
        if (contains({n, Gf4::zero()}, v)) return n;
    }
    throw std::logic_error("no ray contains " + to_string(v));
}

/// Slope of the ray lambda^(n)_0.
inline Slope ray_slope(int n) { return slope(rotation_power(n) * Gf4Vec2{Gf4::zero(), Gf4::one()}); }

/// Striation of the lines with the given slope.
inline int striation_of_slope(const Slope& s) {
    for (int n = 0; n < 5; ++n)
        if (ray_slope(n) == s) return n;
    throw std::logic_error("no striation has slope " + to_string(s));
}

/// 5x5 GF(4) matrix acting on indices.
struct IndexOperator {
    std::array<std::array<Gf4, 5>, 5> m{};

    static IndexOperator identity() {
        IndexOperator out;
        for (int j = 0; j < 5; ++j) out.m[j][j] = Gf4::one();
        return out;
    }

    Gf4 operator()(int r, int c) const { return m[r][c]; }

    friend Index operator*(const IndexOperator& s, const Index& f) {
        Index out;
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) out[r] += s.m[r][c] * f[c];
        return out;
    }
    friend IndexOperator operator*(const IndexOperator& a, const IndexOperator& b) {
        IndexOperator out;
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c)
                for (int k = 0; k < 5; ++k) out.m[r][c] += a.m[r][k] * b.m[k][c];
        return out;
    }

    /// Exactly one nonzero entry in every row and every column.
    bool is_monomial() const {
        for (int j = 0; j < 5; ++j) {
            int row = 0, col = 0;
            for (int k = 0; k < 5; ++k) {
                row += !m[j][k].is_zero();
                col += !m[k][j].is_zero();
            }
            if (row != 1 || col != 1) return false;
        }
        return true;
    }

    /// The m with a nonzero entry in column n.
    int image_of(int n) const {
        for (int r = 0; r < 5; ++r)
            if (!m[r][n].is_zero()) return r;
        throw DomainError("index operator column " + std::to_string(n) + " is zero");
    }

    friend bool operator==(const IndexOperator&, const IndexOperator&) = default;
};

/// S_L, with (S_L)_{mn} = ((L b)_q Q_m + (L b)_p P_m) / (b_q Q_n + b_p P_n)
/// where m is the image of striation n. Every admissible b must agree.
inline IndexOperator index_operator(const SympMat& l) {
    const auto [qv, pv] = qp_vectors();
    IndexOperator out;
    for (int n = 0; n < 5; ++n) {
        const Gf4Vec2 ray_dir = rotation_power(n) * Gf4Vec2{Gf4::zero(), Gf4::one()};
        const int m = striation_of_direction(l * ray_dir);
        std::optional<Gf4> entry;
        for (Gf4Vec2 beta : kAllPoints) {
            const Gf4 den = beta.q * qv[n] + beta.p * pv[n];
            if (den.is_zero()) continue;
            const Gf4Vec2 lb = l * beta;
            const Gf4 value = (lb.q * qv[m] + lb.p * pv[m]) / den;
            if (entry && *entry != value) {
                throw std::logic_error("index operator entry depends on the choice of displacement for L = " +
                                       to_string(l));
            }
            entry = value;
        }
        out.m[m][n] = *entry;
    }
    return out;
}

inline IndexOperator index_operator(const Gf4Mat2& m) { return index_operator(SympMat::from_matrix(m)); }

/// Shift vector f_L: (f_L)_n is the slope of R^-n L H_w~^T L^T R^-n (1,0)^T.
inline Index shift_vector(const SympMat& l) {
    const Gf4Mat2 core = l.matrix() * transpose(shear(Gf4::omega_bar()).matrix()) * transpose(l.matrix());
    Index out;
    for (int n = 0; n < 5; ++n) {
        const Gf4Mat2 back = rotation_power(-n).matrix();
        const Gf4Vec2 mu = back * core * back * Gf4Vec2{Gf4::one(), Gf4::zero()};
        const Slope s = slope(mu);
        if (s.is_infinite()) {
            throw std::logic_error("shift vector slope is infinite for L = " + to_string(l));
        }
        out[n] = s.value();
    }
    return out;
}

inline Index shift_vector(const Gf4Mat2& m) { return shift_vector(SympMat::from_matrix(m)); }

/// Frame after performing U_L in frame f: S_L f + f_L.
inline Index compose_frame(const Index& f, const SympMat& l) { return index_operator(l) * f + shift_vector(l); }

/// The 12 distinct shift vectors over the group, sorted.
inline std::vector<Index> canonical_shift_vectors() {
    std::set<Index> out;
    for (const SympMat& l : enumerate_group()) out.insert(shift_vector(l));
    return {out.begin(), out.end()};
}

}  // namespace qphase4
