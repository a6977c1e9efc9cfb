#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "qphase4/errors.hpp"

namespace qphase4 {

/// An element of the four-element field {0, 1, w, w~}.
///
/// Arithmetic is driven by the literal addition and multiplication tables;
/// there is no polynomial representation behind it. The symbol codes 0..3
/// follow the display order 0, 1, w, w~ used for every axis and table.
class Gf4 {
   public:
    enum Symbol : std::uint8_t { kZero = 0, kOne = 1, kOmega = 2, kOmegaBar = 3 };

    constexpr Gf4() = default;
    constexpr Gf4(Symbol s) : sym_(s) {}

    /// Element with the given display-order code (0..3).
    static constexpr Gf4 from_code(int code) {
        if (code < 0 || code > 3) {
            throw DomainError("Gf4 code out of range: " + std::to_string(code));
        }
        return Gf4(static_cast<Symbol>(code));
    }

    constexpr Symbol symbol() const { return sym_; }
    constexpr int code() const { return static_cast<int>(sym_); }
    constexpr bool is_zero() const { return sym_ == kZero; }

    static constexpr Gf4 zero() { return Gf4(kZero); }
    static constexpr Gf4 one() { return Gf4(kOne); }
    static constexpr Gf4 omega() { return Gf4(kOmega); }
    static constexpr Gf4 omega_bar() { return Gf4(kOmegaBar); }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(kAdd[a.sym_][b.sym_]); }
    // Characteristic 2: subtraction is addition.
    friend constexpr Gf4 operator-(Gf4 a, Gf4 b) { return a + b; }
    friend constexpr Gf4 operator-(Gf4 a) { return a; }
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) { return Gf4(kMul[a.sym_][b.sym_]); }

    constexpr Gf4& operator+=(Gf4 b) { return *this = *this + b; }
    constexpr Gf4& operator*=(Gf4 b) { return *this = *this * b; }

    constexpr Gf4 inverse() const {
        if (is_zero()) {
            throw DomainError("division by zero in GF(4)");
        }
        return Gf4(kInv[sym_]);
    }
    friend constexpr Gf4 operator/(Gf4 a, Gf4 b) { return a * b.inverse(); }

    constexpr Gf4 squared() const { return *this * *this; }

    friend constexpr bool operator==(Gf4, Gf4) = default;
    friend constexpr auto operator<=>(Gf4 a, Gf4 b) { return a.code() <=> b.code(); }

   private:
    static constexpr Symbol kAdd[4][4] = {
        {kZero, kOne, kOmega, kOmegaBar},
        {kOne, kZero, kOmegaBar, kOmega},
        {kOmega, kOmegaBar, kZero, kOne},
        {kOmegaBar, kOmega, kOne, kZero},
    };
    static constexpr Symbol kMul[4][4] = {
        {kZero, kZero, kZero, kZero},
        {kZero, kOne, kOmega, kOmegaBar},
        {kZero, kOmega, kOmegaBar, kOne},
        {kZero, kOmegaBar, kOne, kOmega},
    };
    static constexpr Symbol kInv[4] = {kZero, kOne, kOmegaBar, kOmega};

    Symbol sym_ = kZero;
};

/// All four elements in display order 0, 1, w, w~.
inline constexpr std::array<Gf4, 4> kGf4Elements = {Gf4::zero(), Gf4::one(), Gf4::omega(),
                                                    Gf4::omega_bar()};

/// The unique b with b*b == a. Squaring is a bijection, and b^4 = b, so b = a^2.
constexpr Gf4 sqrt(Gf4 a) { return a.squared(); }

enum class TextStyle {
    kToken,    // 0 1 w W   (input grammar, JSON)
    kAscii,    // 0 1 w w~  (plain text output)
    kUnicode,  // 0 1 ω ω̄
};

inline std::string to_string(Gf4 x, TextStyle style = TextStyle::kAscii) {
    static constexpr std::string_view kToken[] = {"0", "1", "w", "W"};
    static constexpr std::string_view kAsciiNames[] = {"0", "1", "w", "w~"};
    static constexpr std::string_view kUnicodeNames[] = {"0", "1", "ω", "ω̄"};
    switch (style) {
        case TextStyle::kToken:
            return std::string(kToken[x.code()]);
        case TextStyle::kUnicode:
            return std::string(kUnicodeNames[x.code()]);
        case TextStyle::kAscii:
        default:
            return std::string(kAsciiNames[x.code()]);
    }
}

inline std::ostream& operator<<(std::ostream& out, Gf4 x) { return out << to_string(x); }

/// Parses one of the tokens 0, 1, w, W (also accepts w~, ω, ω̄).
inline Gf4 parse_gf4(std::string_view token) {
    if (token == "0") return Gf4::zero();
    if (token == "1") return Gf4::one();
    if (token == "w" || token == "ω") return Gf4::omega();
    if (token == "W" || token == "w~" || token == "ω̄") return Gf4::omega_bar();
    throw ParseError("not a GF(4) element: '" + std::string(token) + "'");
}

/// A phase-space point or displacement, treated as a column vector (q, p).
struct Gf4Vec2 {
    Gf4 q;
    Gf4 p;

    friend constexpr Gf4Vec2 operator+(Gf4Vec2 a, Gf4Vec2 b) { return {a.q + b.q, a.p + b.p}; }
    friend constexpr Gf4Vec2 operator-(Gf4Vec2 a, Gf4Vec2 b) { return a + b; }
    friend constexpr Gf4Vec2 operator*(Gf4 c, Gf4Vec2 v) { return {c * v.q, c * v.p}; }
    constexpr bool is_zero() const { return q.is_zero() && p.is_zero(); }

    friend constexpr bool operator==(Gf4Vec2, Gf4Vec2) = default;
    friend constexpr auto operator<=>(Gf4Vec2, Gf4Vec2) = default;
};

/// Position of a point in the q-major enumeration used for per-point arrays.
constexpr int point_ordinal(Gf4Vec2 v) { return 4 * v.q.code() + v.p.code(); }
constexpr Gf4Vec2 point_from_ordinal(int i) { return {Gf4::from_code(i / 4), Gf4::from_code(i % 4)}; }

inline constexpr std::array<Gf4Vec2, 16> kAllPoints = [] {
    std::array<Gf4Vec2, 16> out{};
    for (int i = 0; i < 16; ++i) {
        out[i] = point_from_ordinal(i);
    }
    return out;
}();

inline std::string to_string(Gf4Vec2 v, TextStyle style = TextStyle::kAscii) {
    return "(" + to_string(v.q, style) + "," + to_string(v.p, style) + ")";
}

/// 2x2 matrix over GF(4), entries row-major [[a, b], [c, d]].
struct Gf4Mat2 {
    Gf4 a, b, c, d;

    static constexpr Gf4Mat2 identity() { return {Gf4::one(), Gf4::zero(), Gf4::zero(), Gf4::one()}; }

    friend constexpr Gf4Mat2 operator*(const Gf4Mat2& x, const Gf4Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
    friend constexpr Gf4Vec2 operator*(const Gf4Mat2& m, Gf4Vec2 v) {
        return {m.a * v.q + m.b * v.p, m.c * v.q + m.d * v.p};
    }

    friend constexpr bool operator==(const Gf4Mat2&, const Gf4Mat2&) = default;
    friend constexpr auto operator<=>(const Gf4Mat2&, const Gf4Mat2&) = default;
};

// ad - bc, and minus is plus here.
constexpr Gf4 det(const Gf4Mat2& m) { return m.a * m.d + m.b * m.c; }
constexpr Gf4 trace(const Gf4Mat2& m) { return m.a + m.d; }
constexpr Gf4Mat2 transpose(const Gf4Mat2& m) { return {m.a, m.c, m.b, m.d}; }

inline Gf4Mat2 inverse(const Gf4Mat2& m) {
    const Gf4 dt = det(m);
    if (dt.is_zero()) {
        throw DomainError("singular GF(4) matrix has no inverse");
    }
    const Gf4 k = dt.inverse();
    return {k * m.d, k * m.b, k * m.c, k * m.a};
}

inline std::string to_string(const Gf4Mat2& m, TextStyle style = TextStyle::kToken) {
    return "[[" + to_string(m.a, style) + "," + to_string(m.b, style) + "],[" + to_string(m.c, style) +
           "," + to_string(m.d, style) + "]]";
}

/// Slope p/q of a nonzero vector, or infinity when q = 0.
class Slope {
   public:
    static constexpr Slope finite(Gf4 v) { return Slope(v); }
    static constexpr Slope infinity() { return Slope(); }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    /// Only meaningful for finite slopes.
    constexpr Gf4 value() const {
        if (!value_) {
            throw DomainError("infinite slope has no field value");
        }
        return *value_;
    }
    /// 0..3 for the finite values in display order, 4 for infinity.
    constexpr int code() const { return value_ ? value_->code() : 4; }

    /// x + infinity is infinity.
    friend constexpr Slope operator+(Gf4 x, Slope s) { return s.is_infinite() ? s : Slope(x + *s.value_); }

    friend constexpr bool operator==(const Slope&, const Slope&) = default;

   private:
    constexpr Slope() = default;
    constexpr explicit Slope(Gf4 v) : value_(v) {}
    std::optional<Gf4> value_;
};

inline Slope slope(Gf4Vec2 v) {
    if (v.is_zero()) {
        throw DomainError("slope undefined at origin");
    }
    if (v.q.is_zero()) {
        return Slope::infinity();
    }
    return Slope::finite(v.p / v.q);
}

inline std::string to_string(const Slope& s, TextStyle style = TextStyle::kAscii) {
    return s.is_infinite() ? std::string("inf") : to_string(s.value(), style);
}

/// Coefficients of x in the self-dual basis (e1, e2) = (w~, w).
/// x1 addresses the first qubit, x2 the second.
struct QubitCoords {
    std::uint8_t x1 = 0;
    std::uint8_t x2 = 0;
    friend constexpr bool operator==(QubitCoords, QubitCoords) = default;
};

constexpr QubitCoords expand(Gf4 x) {
    constexpr QubitCoords kTable[4] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    return kTable[x.code()];
}

constexpr Gf4 reconstruct(QubitCoords c) {
    Gf4 out = Gf4::zero();
    if (c.x1 & 1) out += Gf4::omega_bar();
    if (c.x2 & 1) out += Gf4::omega();
    return out;
}

}  // namespace qphase4
