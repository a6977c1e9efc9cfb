#pragma once

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "qphase4/clifford.hpp"
#include "qphase4/errors.hpp"
#include "qphase4/exact.hpp"
#include "qphase4/gf4.hpp"
#include "qphase4/phasespace.hpp"
#include "qphase4/state.hpp"
#include "qphase4/symplectic.hpp"
#include "qphase4/wigner.hpp"

namespace qphase4 {

using json = nlohmann::json;

// JSON encodings. Gf4 is one of "0", "1", "w", "W"; exact rationals are
// [num, den] pairs; matrices are nested row arrays.

inline void to_json(json& j, const Gf4& x) { j = to_string(x, TextStyle::kToken); }
inline void from_json(const json& j, Gf4& x) {
    if (!j.is_string()) throw ParseError("GF(4) element must be a JSON string");
    x = parse_gf4(j.get<std::string>());
}

inline void to_json(json& j, const Gf4Vec2& v) { j = json::array({v.q, v.p}); }
inline void from_json(const json& j, Gf4Vec2& v) {
    if (!j.is_array() || j.size() != 2) throw ParseError("a phase-space vector is a 2-element array");
    v = {j[0].get<Gf4>(), j[1].get<Gf4>()};
}

inline void to_json(json& j, const Gf4Mat2& m) { j = json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }
inline void from_json(const json& j, Gf4Mat2& m) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
        j[1].size() != 2) {
        throw ParseError("a 2x2 matrix is a nested [[a,b],[c,d]] array");
    }
    m = {j[0][0].get<Gf4>(), j[0][1].get<Gf4>(), j[1][0].get<Gf4>(), j[1][1].get<Gf4>()};
}

inline void to_json(json& j, const SympMat& l) { j = l.matrix(); }
inline void from_json(const json& j, SympMat& l) { l = SympMat::from_matrix(j.get<Gf4Mat2>()); }

inline void to_json(json& j, const Decomposition& d) {
    j = json{{"r", d.r}, {"x", d.x}, {"s", d.s}, {"text", to_string(d)}};
}
inline void from_json(const json& j, Decomposition& d) {
    d = {j.at("r").get<int>(), j.at("x").get<Gf4>(), j.at("s").get<int>()};
}

inline void to_json(json& j, const Index& f) {
    j = json::array();
    for (int n = 0; n < 5; ++n) j.push_back(f[n]);
}
inline void from_json(const json& j, Index& f) {
    if (!j.is_array() || j.size() != 5) throw ParseError("an index is a 5-element array");
    for (int n = 0; n < 5; ++n) f[n] = j[n].get<Gf4>();
}

inline void to_json(json& j, const Line& l) { j = json{{"n", l.n}, {"k", l.k}}; }
inline void from_json(const json& j, Line& l) { l = {j.at("n").get<int>(), j.at("k").get<Gf4>()}; }

inline void to_json(json& j, const MubLabel& l) { j = json{{"n", l.n}, {"k", l.k}}; }

inline void to_json(json& j, const IndexOperator& s) {
    j = json::array();
    for (int r = 0; r < 5; ++r) {
        json row = json::array();
        for (int c = 0; c < 5; ++c) row.push_back(s(r, c));
        j.push_back(row);
    }
}
inline void from_json(const json& j, IndexOperator& s) {
    if (!j.is_array() || j.size() != 5) throw ParseError("an index operator is a 5x5 array");
    for (int r = 0; r < 5; ++r) {
        if (!j[r].is_array() || j[r].size() != 5) throw ParseError("an index operator is a 5x5 array");
        for (int c = 0; c < 5; ++c) s.m[r][c] = j[r][c].get<Gf4>();
    }
}

namespace detail {

inline json rational_to_json(const Rational& x) {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    constexpr auto kMax = std::numeric_limits<long long>::max();
    if (abs(num) > kMax || den > kMax) {
        return json::array({num.str(), den.str()});
    }
    return json::array({num.convert_to<long long>(), den.convert_to<long long>()});
}

inline Rational rational_from_json(const json& j) {
    auto part = [](const json& v) -> boost::multiprecision::cpp_int {
        if (v.is_number_integer()) return boost::multiprecision::cpp_int(v.get<long long>());
        if (v.is_string()) return boost::multiprecision::cpp_int(v.get<std::string>());
        throw ParseError("rational component must be an integer");
    };
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_array() || j.size() != 2) throw ParseError("a rational is a [num, den] pair");
    const auto den = part(j[1]);
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rational(part(j[0]), den);
}

}  // namespace detail

/// Parses "3", "-1/2", "i", "-i/2", "1/2+1/2i", "1-i".
inline ExactScalar parse_scalar(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty scalar");
    // "i/2" and "3i/4" are rewritten as "1/2i" and "3/4i".
    if (const auto pos = s.find("i/"); pos != std::string::npos) {
        std::string prefix = s.substr(0, pos);
        if (prefix.empty() || prefix.back() == '+' || prefix.back() == '-') prefix += "1";
        s = prefix + s.substr(pos + 1) + "i";
    }

    auto parse_rational = [&](std::string t) -> Rational {
        if (t.empty() || t == "+") return 1;
        if (t == "-") return -1;
        if (t.front() == '+') t.erase(0, 1);
        const auto slash = t.find('/');
        try {
            if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(t));
            const boost::multiprecision::cpp_int den(t.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
            return Rational(boost::multiprecision::cpp_int(t.substr(0, slash)), den);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("not an exact scalar: '" + std::string(text) + "'");
        }
    };
    auto check_digits = [&](const std::string& t) {
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '+' && c != '-') {
                throw ParseError("not an exact scalar: '" + std::string(text) + "'");
            }
    };

    if (s.back() != 'i') {
        check_digits(s);
        return parse_rational(s);
    }
    std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_part, im_part = body;
    if (split != std::string::npos) {
        re_part = body.substr(0, split);
        im_part = body.substr(split);
    }
    check_digits(re_part);
    check_digits(im_part);
    return {re_part.empty() ? Rational(0) : parse_rational(re_part), parse_rational(im_part)};
}

inline void to_json(json& j, const ExactScalar& z) {
    j = json{{"re", detail::rational_to_json(z.re())}, {"im", detail::rational_to_json(z.im())}};
}
inline void from_json(const json& j, ExactScalar& z) {
    if (j.is_string()) {
        z = parse_scalar(j.get<std::string>());
    } else if (j.is_object()) {
        z = {j.contains("re") ? detail::rational_from_json(j["re"]) : Rational(0),
             j.contains("im") ? detail::rational_from_json(j["im"]) : Rational(0)};
    } else {
        z = detail::rational_from_json(j);
    }
}

inline void to_json(json& j, const ExactOperator& a) {
    j = json::array();
    for (std::size_t r = 0; r < 4; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < 4; ++c) row.push_back(a(r, c));
        j.push_back(row);
    }
}
inline void from_json(const json& j, ExactOperator& a) {
    if (!j.is_array() || j.size() != 4) throw ParseError("an operator is a 4x4 array");
    for (std::size_t r = 0; r < 4; ++r) {
        if (!j[r].is_array() || j[r].size() != 4) throw ParseError("an operator is a 4x4 array");
        for (std::size_t c = 0; c < 4; ++c) a(r, c) = j[r][c].get<ExactScalar>();
    }
}

inline void to_json(json& j, const ExactVector& v) {
    j = json::array();
    for (std::size_t r = 0; r < 4; ++r) j.push_back(v[r]);
}
inline void from_json(const json& j, ExactVector& v) {
    if (!j.is_array() || j.size() != 4) throw ParseError("a state vector has 4 amplitudes");
    for (std::size_t r = 0; r < 4; ++r) v[r] = j[r].get<ExactScalar>();
}

/// Row r of the value grid holds p = kGf4Elements[3 - r], so the origin
/// prints in the lower left; columns run q = 0, 1, w, w~.
inline void to_json(json& j, const WignerTable& t) {
    json rows = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (Gf4 q : kGf4Elements) row.push_back(detail::rational_to_json(t.at({q, kGf4Elements[3 - r]})));
        rows.push_back(row);
    }
    j = json{{"f", t.frame}, {"values", rows}};
}
inline void from_json(const json& j, WignerTable& t) {
    t.frame = j.at("f").get<Index>();
    const json& rows = j.at("values");
    if (!rows.is_array() || rows.size() != 4) throw ParseError("Wigner values are a 4x4 array");
    for (int r = 0; r < 4; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 4) throw ParseError("Wigner values are a 4x4 array");
        for (int c = 0; c < 4; ++c) t.at({kGf4Elements[c], kGf4Elements[3 - r]}) = detail::rational_from_json(rows[r][c]);
    }
}

/// Parses "[[a,b],[c,d]]" with tokens 0, 1, w, W; whitespace-insensitive.
inline Gf4Mat2 parse_matrix(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]") {
        throw ParseError("matrix must look like [[a,b],[c,d]], got '" + std::string(text) + "'");
    }
    const std::string inner_text = s.substr(2, s.size() - 4);
    const auto mid = inner_text.find("],[");
    if (mid == std::string::npos) {
        throw ParseError("matrix must look like [[a,b],[c,d]], got '" + std::string(text) + "'");
    }
    auto row = [&](const std::string& r) -> std::pair<Gf4, Gf4> {
        const auto comma = r.find(',');
        if (comma == std::string::npos || r.find(',', comma + 1) != std::string::npos) {
            throw ParseError("matrix row must have two entries, got '" + r + "'");
        }
        return {parse_gf4(r.substr(0, comma)), parse_gf4(r.substr(comma + 1))};
    };
    const auto [a, b] = row(inner_text.substr(0, mid));
    const auto [c, d] = row(inner_text.substr(mid + 3));
    return {a, b, c, d};
}

/// A step of an operation sequence: a symplectic U_L or a displacement D_beta.
using Operation = std::variant<SympMat, Gf4Vec2>;

/// Parses a matrix literal, one of the names I, R, H0, H1, Hw, HW, or a
/// displacement written D(q,p).
inline Operation parse_operation(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "I") return SympMat();
    if (s == "R") return rotation();
    if (s.size() == 2 && s[0] == 'H') return shear(parse_gf4(s.substr(1)));
    if (s.size() > 3 && s.substr(0, 2) == "D(" && s.back() == ')') {
        const std::string body = s.substr(2, s.size() - 3);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw ParseError("displacement must look like D(q,p)");
        return Gf4Vec2{parse_gf4(body.substr(0, comma)), parse_gf4(body.substr(comma + 1))};
    }
    return SympMat::from_matrix(parse_matrix(s));
}

/// A symplectic matrix given as a literal or one of the generator names.
inline SympMat parse_symplectic(std::string_view text) {
    const Operation op = parse_operation(text);
    if (const auto* l = std::get_if<SympMat>(&op)) return *l;
    throw ParseError("expected a symplectic matrix, got the displacement '" + std::string(text) + "'");
}

inline std::string to_string(const Operation& op) {
    if (const auto* l = std::get_if<SympMat>(&op)) return "U_L, L = " + to_string(*l);
    return "D" + to_string(std::get<Gf4Vec2>(op), TextStyle::kToken);
}

namespace detail {

inline DensityState state_from_json(const json& j) {
    if (j.contains("product")) {
        const json& p = j["product"];
        if (!p.is_array() || p.size() != 2) throw ParseError("\"product\" needs two arrow names");
        return DensityState::product(parse_arrow(p[0].get<std::string>()), parse_arrow(p[1].get<std::string>()));
    }
    if (j.contains("vector")) return DensityState::from_vector(j["vector"].get<ExactVector>());
    if (j.contains("density")) return DensityState::from_matrix(j["density"].get<ExactOperator>());
    if (j.contains("mixed")) return DensityState::maximally_mixed();
    throw ParseError("state JSON needs one of \"product\", \"vector\", \"density\", \"mixed\"");
}

}  // namespace detail

/// State specifications:
///   mixed                 I/4
///   up,right  (or up*right)  named product state, first qubit first
///   vec:1,1,0,0           unnormalized amplitudes (exact scalars)
///   @file.json            {"product":[..]} | {"vector":[..]} | {"density":[[..]]}
inline DensityState parse_state(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty state specification");
    if (s == "mixed") return DensityState::maximally_mixed();
    if (s[0] == '@') {
        std::ifstream in(s.substr(1));
        if (!in) throw ParseError("cannot open state file '" + s.substr(1) + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad state JSON: ") + e.what());
        }
        try {
            return detail::state_from_json(j);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad state JSON: ") + e.what());
        }
    }
    if (s.rfind("vec:", 0) == 0) {
        std::vector<std::string> parts(1);
        for (char c : s.substr(4)) {
            if (c == ',') {
                parts.emplace_back();
            } else {
                parts.back() += c;
            }
        }
        if (parts.size() != 4) throw ParseError("a state vector has 4 amplitudes");
        ExactVector v;
        for (std::size_t j = 0; j < 4; ++j) v[j] = parse_scalar(parts[j]);
        return DensityState::from_vector(v);
    }
    const auto sep = s.find_first_of(",*");
    if (sep == std::string::npos) throw ParseError("unrecognized state specification '" + s + "'");
    return DensityState::product(parse_arrow(s.substr(0, sep)), parse_arrow(s.substr(sep + 1)));
}

}  // namespace qphase4
