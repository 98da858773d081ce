#include "vk/laurent.hpp"

#include <cstdlib>

namespace vk {

void add_term(LaurentPoly2& p, int t_exp, int l_exp, const Coeff& coeff) {
    if (coeff == 0) return;
    Monomial key{t_exp, l_exp};
    auto it = p.terms.find(key);
    if (it == p.terms.end()) {
        p.terms.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) p.terms.erase(it);
}

LaurentPoly2 monomial(const Coeff& coeff, int t_exp, int l_exp) {
    LaurentPoly2 p;
    add_term(p, t_exp, l_exp, coeff);
    return p;
}

LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q) {
    LaurentPoly2 out = p;
    for (const auto& [m, c] : q.terms) add_term(out, m.t_exp, m.l_exp, c);
    return out;
}

LaurentPoly2 negate(const LaurentPoly2& p) {
    LaurentPoly2 out;
    for (const auto& [m, c] : p.terms) out.terms.emplace(m, -c);
    return out;
}

LaurentPoly2 mul_monomial(const LaurentPoly2& p, const Coeff& coeff, int t_exp, int l_exp) {
    LaurentPoly2 out;
    if (coeff == 0) return out;
    for (const auto& [m, c] : p.terms)
        out.terms.emplace(Monomial{m.t_exp + t_exp, m.l_exp + l_exp}, c * coeff);
    return out;
}

LaurentPoly2 invert_t(const LaurentPoly2& p) {
    LaurentPoly2 out;
    for (const auto& [m, c] : p.terms) out.terms.emplace(Monomial{-m.t_exp, m.l_exp}, c);
    return out;
}

LaurentPoly2 set_l_to_one(const LaurentPoly2& p) {
    LaurentPoly2 out;
    for (const auto& [m, c] : p.terms) add_term(out, m.t_exp, 0, c);
    return out;
}

LaurentPoly2 fold_abs_l(const LaurentPoly2& p) {
    LaurentPoly2 out;
    for (const auto& [m, c] : p.terms) add_term(out, m.t_exp, std::abs(m.l_exp), c);
    return out;
}

namespace {

void append_factor(std::string& out, bool& first_factor, const std::string& factor) {
    if (!first_factor) out += '*';
    out += factor;
    first_factor = false;
}

std::string term_body(const Monomial& m, const Coeff& magnitude) {
    if (m.is_constant()) return magnitude.str();
    std::string out;
    bool first = true;
    if (magnitude != 1) append_factor(out, first, magnitude.str());
    if (m.t_exp != 0)
        append_factor(out, first, m.t_exp == 1 ? "t" : "t^" + std::to_string(m.t_exp));
    if (m.l_exp != 0)
        append_factor(out, first, m.l_exp == 1 ? "l" : "l^" + std::to_string(m.l_exp));
    return out;
}

}  // namespace

std::string to_string(const LaurentPoly2& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms) {  // map iterates in display order
        bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += term_body(m, negative ? Coeff(-c) : c);
        first = false;
    }
    return out;
}

}  // namespace vk
