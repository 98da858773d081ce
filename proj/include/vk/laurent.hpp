#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace vk {

// Exact integer coefficients; counts can grow with crossing number and the
// equality-based tests tolerate no overflow.
using Coeff = boost::multiprecision::cpp_int;

// Exponents of one monomial t^t_exp * l^l_exp.
struct Monomial {
    int t_exp = 0;
    int l_exp = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    bool is_constant() const { return t_exp == 0 && l_exp == 0; }
};

// Display order: l exponent descending, then t exponent descending, with
// the constant term always last. All rendered output (strings, JSON term
// lists) follows this order.
struct MonomialDisplayOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.is_constant() != b.is_constant()) return b.is_constant();
        if (a.l_exp != b.l_exp) return a.l_exp > b.l_exp;
        return a.t_exp > b.t_exp;
    }
};

// Sparse two-variable integer Laurent polynomial. No zero coefficient is
// ever stored, so map equality is polynomial equality and {} is zero.
// One-variable polynomials in t are the l_exp == 0 case.
struct LaurentPoly2 {
    std::map<Monomial, Coeff, MonomialDisplayOrder> terms;

    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;
    bool is_zero() const { return terms.empty(); }
};

// coeff * t^t_exp * l^l_exp (the zero coefficient yields the zero polynomial)
LaurentPoly2 monomial(const Coeff& coeff, int t_exp, int l_exp);

LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 negate(const LaurentPoly2& p);

// p * coeff * t^t_exp * l^l_exp — enough ring structure for the algebraic
// identities exercised by the tests.
LaurentPoly2 mul_monomial(const LaurentPoly2& p, const Coeff& coeff, int t_exp, int l_exp);

LaurentPoly2 invert_t(const LaurentPoly2& p);      // t -> t^-1
LaurentPoly2 set_l_to_one(const LaurentPoly2& p);  // l -> 1
LaurentPoly2 fold_abs_l(const LaurentPoly2& p);    // l^q -> l^|q|

// In-place accumulation of one term, dropping the entry if it cancels.
void add_term(LaurentPoly2& p, int t_exp, int l_exp, const Coeff& coeff);

// Deterministic rendering, e.g. "-t^2*l - t^-2*l + 2"; zero is "0".
std::string to_string(const LaurentPoly2& p);

}  // namespace vk
