// Shared rendering/parsing for sums of c * VAR^(e) terms. Canonical form:
//   - terms joined by " + " / " - " on the coefficient's sign,
//   - coefficient 1 omitted when an exponent part is present,
//   - exponent 0 omits the variable, exponent 1 omits "^(e)".
// Used for both the Novikov variable Q and the equivariant variable z.
#ifndef ORBIQC_TERM_FORMAT_HPP
#define ORBIQC_TERM_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbiqc/rational.hpp"

namespace orbiqc::detail {

inline std::string format_term(char var, const std::string& exp, bool exp_is_zero,
                               bool exp_is_one, const Rational& coeff) {
    std::string c = coeff.abs().to_string();
    if (exp_is_zero) return c;
    std::string v = exp_is_one ? std::string(1, var)
                               : std::string(1, var) + "^(" + exp + ")";
    if (c == "1") return v;
    return c + "*" + v;
}

template <typename Exp, typename Fmt>
std::string format_sum(char var, const std::vector<std::pair<Exp, Rational>>& terms, Fmt&& fmt) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (first) {
            if (c.is_negative()) out += "-";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        out += fmt(var, e, c);
    }
    return out;
}

// Splits a rendered sum into (sign, token) chunks at top-level +/-.
// Signs inside exponent parentheses do not split. Spaces are dropped.
inline std::vector<std::pair<int, std::string>> split_signed(std::string_view s) {
    std::vector<std::pair<int, std::string>> out;
    std::string cur;
    int sign = 1;
    int depth = 0;
    for (char ch : s) {
        if (ch == ' ') continue;
        if (ch == '(') {
            ++depth;
            cur += ch;
            continue;
        }
        if (ch == ')') {
            if (--depth < 0) throw std::domain_error("parse: unbalanced ')'");
            cur += ch;
            continue;
        }
        if (depth == 0 && (ch == '+' || ch == '-')) {
            if (cur.empty()) {
                if (ch == '-') sign = -sign;
                continue;
            }
            out.emplace_back(sign, cur);
            cur.clear();
            sign = (ch == '-') ? -1 : 1;
            continue;
        }
        cur += ch;
    }
    if (depth != 0) throw std::domain_error("parse: unbalanced '('");
    if (!cur.empty()) out.emplace_back(sign, cur);
    return out;
}

// Parses one chunk "c*VAR^(e)" / "c*VAR" / "VAR^(e)" / "VAR" / "c".
// Returns (coefficient, exponent-string); exponent "" means 0, "1" means 1.
inline std::pair<Rational, std::string> parse_term(char var, const std::string& t) {
    if (t.empty()) throw std::domain_error("parse_term: empty term");
    std::string coeff = "1";
    std::string rest = t;
    auto star = t.find('*');
    if (star != std::string::npos) {
        coeff = t.substr(0, star);
        rest = t.substr(star + 1);
    } else if (t[0] != var) {
        return {Rational::parse(t), ""};
    }
    if (rest.empty() || rest[0] != var)
        throw std::domain_error("parse_term: expected variable in '" + t + "'");
    if (rest.size() == 1) return {Rational::parse(coeff), "1"};
    if (rest.size() < 5 || rest[1] != '^' || rest[2] != '(' || rest.back() != ')')
        throw std::domain_error("parse_term: bad exponent in '" + t + "'");
    return {Rational::parse(coeff), rest.substr(3, rest.size() - 4)};
}

} // namespace orbiqc::detail

#endif
