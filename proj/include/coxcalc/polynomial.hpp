#pragma once
#include <string>
#include <vector>

#include "coxcalc/int_matrix.hpp"

namespace coxcalc {

struct Term {
    Rat c;
    std::vector<Int> e;  // exponent vector, one entry per variable

    bool operator==(const Term& o) const { return c == o.c && e == o.e; }
};

// Sparse polynomial with exact rational coefficients. Terms are kept sorted by
// exponent vector, exponents distinct, coefficients nonzero.
struct Polynomial {
    std::vector<Term> terms;

    static Polynomial zero() { return {}; }
    static Polynomial monomial(const Rat& c, std::vector<Int> e);
    static Polynomial from_terms(std::vector<Term> ts);  // combines and normalizes

    int nvars() const { return terms.empty() ? 0 : int(terms[0].e.size()); }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const Polynomial& o) const { return terms == o.terms; }

    Polynomial plus(const Polynomial& o) const;
    Polynomial times(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;

    // Exponent support: variables occurring in some term.
    std::vector<int> support() const;

    // Value at a rational point, one coordinate per variable.
    Rat eval(const std::vector<Rat>& x) const;

    std::string to_string(const std::vector<std::string>& var_names) const;
};

// Parse "num/den" or "num" into an exact rational.
Rat parse_rational(const std::string& s);
std::string rational_string(const Rat& q);

}  // namespace coxcalc
