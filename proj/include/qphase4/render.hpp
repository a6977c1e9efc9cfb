#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "qphase4/clifford.hpp"
#include "qphase4/exact.hpp"
#include "qphase4/gf4.hpp"
#include "qphase4/phasespace.hpp"
#include "qphase4/state.hpp"
#include "qphase4/symplectic.hpp"
#include "qphase4/wigner.hpp"

namespace qphase4 {

namespace detail {

/// Display width in code points, so Unicode symbols pad like ASCII ones.
/// Combining marks (U+0300..U+036F, the bar of w~) take no column.
inline std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const auto c = static_cast<unsigned char>(s[j]);
        if ((c & 0xC0) == 0x80) continue;
        const bool combining =
            j + 1 < s.size() && (c == 0xCC || (c == 0xCD && static_cast<unsigned char>(s[j + 1]) < 0xB0));
        if (!combining) ++n;
    }
    return n;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    return w >= width ? s : std::string(width - w, ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    return w >= width ? s : s + std::string(width - w, ' ');
}

inline std::string center(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    if (w >= width) return s;
    const std::size_t left = (width - w) / 2;
    return std::string(left, ' ') + s + std::string(width - w - left, ' ');
}

/// Rows as left-aligned columns separated by two spaces.
inline std::string columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += c + 1 == row.size() ? row[c] : pad_right(row[c], widths[c]);
        }
        out += line + "\n";
    }
    return out;
}

inline std::string arrow_pair(const std::optional<std::pair<Arrow, Arrow>>& p, const MubLabel& label,
                              TextStyle style) {
    if (p) return to_string(p->first, style) + to_string(p->second, style);
    return "b(" + std::to_string(label.n) + "," + to_string(label.k, style) + ")";
}

}  // namespace detail

/// Addition and multiplication tables in the order 0, 1, w, w~.
inline std::string render_field_tables(TextStyle style = TextStyle::kAscii) {
    auto table = [&](const char* op, auto fn) {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{op};
        for (Gf4 b : kGf4Elements) head.push_back(to_string(b, style));
        rows.push_back(head);
        for (Gf4 a : kGf4Elements) {
            std::vector<std::string> row{to_string(a, style)};
            for (Gf4 b : kGf4Elements) row.push_back(to_string(fn(a, b), style));
            rows.push_back(row);
        }
        return detail::columns(rows);
    };
    return table("+", [](Gf4 a, Gf4 b) { return a + b; }) + "\n" + table("x", [](Gf4 a, Gf4 b) { return a * b; });
}

/// The 4x4 grid of displacement operators: p = w~ on top, q along the bottom.
inline std::string render_displacement_grid(TextStyle style = TextStyle::kAscii) {
    std::size_t cell = 0;
    for (Gf4Vec2 b : kAllPoints) cell = std::max(cell, detail::display_width(displacement_name(b, style)));
    cell += 2;
    std::size_t axis = 0;
    for (Gf4 x : kGf4Elements) axis = std::max(axis, detail::display_width(to_string(x, style)));

    std::string rule = std::string(axis + 1, ' ') + "+";
    for (int c = 0; c < 4; ++c) rule += std::string(cell, '-') + "+";
    std::string out = detail::pad_left("p", axis) + "\n" + rule + "\n";
    for (int r = 3; r >= 0; --r) {
        const Gf4 p = kGf4Elements[r];
        std::string line = detail::pad_left(to_string(p, style), axis) + " |";
        for (Gf4 q : kGf4Elements) line += detail::center(displacement_name({q, p}, style), cell) + "|";
        out += line + "\n" + rule + "\n";
    }
    std::string foot = std::string(axis + 2, ' ');
    for (Gf4 q : kGf4Elements) foot += detail::center(to_string(q, style), cell) + " ";
    while (!foot.empty() && foot.back() == ' ') foot.pop_back();
    return out + foot + "  q\n";
}

/// Exact scalars right-aligned in columns, one row per line.
template <std::size_t N>
std::string render_matrix(const Matrix<N>& a) {
    std::array<std::array<std::string, N>, N> text;
    std::size_t width = 0;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            text[r][c] = to_string(a(r, c));
            width = std::max(width, text[r][c].size());
        }
    std::string out;
    for (std::size_t r = 0; r < N; ++r) {
        out += "[";
        for (std::size_t c = 0; c < N; ++c) out += (c ? " " : "") + detail::pad_left(text[r][c], width);
        out += "]\n";
    }
    return out;
}

inline std::string render_index_operator(const IndexOperator& s, TextStyle style = TextStyle::kAscii) {
    std::size_t width = 1;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) width = std::max(width, detail::display_width(to_string(s(r, c), style)));
    std::string out;
    for (int r = 0; r < 5; ++r) {
        out += "[";
        for (int c = 0; c < 5; ++c) out += (c ? " " : "") + detail::pad_left(to_string(s(r, c), style), width);
        out += "]\n";
    }
    return out;
}

/// Row label for horizontal position p: the MUB vector selected by the
/// striation-1 line through (0, p), as a pair of arrows when it is a product.
inline std::string row_label(const WignerFrame& fr, Gf4 p, TextStyle style) {
    const MubLabel label = fr.line_label(line_through({Gf4::zero(), p}, 1));
    return detail::arrow_pair(as_arrow_product(mub_vector(label)), label, style);
}

/// Column label for q, from the vertical (striation 0) line q.
inline std::string column_label(const WignerFrame& fr, Gf4 q, TextStyle style) {
    const MubLabel label = fr.line_label(line_through({q, Gf4::zero()}, 0));
    return detail::arrow_pair(as_arrow_product(mub_vector(label)), label, style);
}

/// The 4x4 Wigner grid with the origin in the lower left, columns q = 0, 1, w, w~,
/// arrow labels for the horizontal lines on the right and the vertical lines below.
inline std::string render_wigner(const WignerTable& table, TextStyle style = TextStyle::kAscii) {
    const WignerFrame& fr = frame(table.frame);
    std::size_t cell = 1;
    for (const Rational& v : table.values) cell = std::max(cell, to_string(v).size());
    for (Gf4 q : kGf4Elements) cell = std::max(cell, detail::display_width(column_label(fr, q, style)));
    cell += 2;
    std::size_t axis = 0;
    for (Gf4 x : kGf4Elements) axis = std::max(axis, detail::display_width(to_string(x, style)));

    std::string rule = std::string(axis + 1, ' ') + "+";
    for (int c = 0; c < 4; ++c) rule += std::string(cell, '-') + "+";

    std::string out = "f = " + to_string(table.frame, style) + "\n" + rule + "\n";
    for (int r = 3; r >= 0; --r) {
        const Gf4 p = kGf4Elements[r];
        std::string line = detail::pad_left(to_string(p, style), axis) + " |";
        for (Gf4 q : kGf4Elements) line += detail::center(to_string(table.at({q, p})), cell) + "|";
        out += line + " " + row_label(fr, p, style) + "\n" + rule + "\n";
    }
    std::string axis_line = std::string(axis + 2, ' ');
    std::string label_line = axis_line;
    for (Gf4 q : kGf4Elements) {
        axis_line += detail::center(to_string(q, style), cell) + " ";
        label_line += detail::center(column_label(fr, q, style), cell) + " ";
    }
    auto trim = [](std::string s) {
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    };
    return out + trim(axis_line) + "\n" + trim(label_line) + "\n";
}

inline std::string render_state(const DensityState& rho) {
    std::ostringstream out;
    out << "rho =\n" << render_matrix(rho.matrix());
    return out.str();
}

}  // namespace qphase4
