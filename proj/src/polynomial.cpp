#include "coxcalc/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace coxcalc {

Polynomial Polynomial::monomial(const Rat& c, std::vector<Int> e) {
    Polynomial p;
    if (c != 0) p.terms.push_back({c, std::move(e)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> ts) {
    std::map<std::vector<Int>, Rat> acc;
    for (auto& t : ts) acc[t.e] += t.c;
    Polynomial p;
    for (auto& [e, c] : acc)
        if (c != 0) p.terms.push_back({c, e});
    return p;
}

Polynomial Polynomial::plus(const Polynomial& o) const {
    std::vector<Term> ts = terms;
    ts.insert(ts.end(), o.terms.begin(), o.terms.end());
    return from_terms(std::move(ts));
}

Polynomial Polynomial::times(const Polynomial& o) const {
    std::vector<Term> ts;
    for (const auto& a : terms)
        for (const auto& b : o.terms) {
            if (a.e.size() != b.e.size()) throw std::invalid_argument("variable count mismatch");
            Term t;
            t.c = a.c * b.c;
            t.e.resize(a.e.size());
            for (size_t i = 0; i < a.e.size(); ++i) t.e[i] = a.e[i] + b.e[i];
            ts.push_back(std::move(t));
        }
    return from_terms(std::move(ts));
}

Polynomial Polynomial::scaled(const Rat& c) const {
    if (c == 0) return {};
    Polynomial p = *this;
    for (auto& t : p.terms) t.c *= c;
    return p;
}

std::vector<int> Polynomial::support() const {
    std::vector<int> out;
    if (terms.empty()) return out;
    for (size_t i = 0; i < terms[0].e.size(); ++i) {
        bool occurs = false;
        for (const auto& t : terms) occurs = occurs || t.e[i] != 0;
        if (occurs) out.push_back(int(i));
    }
    return out;
}

Rat Polynomial::eval(const std::vector<Rat>& x) const {
    Rat total = 0;
    for (const auto& t : terms) {
        if (t.e.size() > x.size()) throw std::invalid_argument("point has too few coordinates");
        Rat v = t.c;
        for (size_t i = 0; i < t.e.size(); ++i) {
            if (t.e[i] < 0) throw std::invalid_argument("negative exponent");
            Int k = t.e[i];
            Rat base = x[i];
            for (Int p = 0; p < k; ++p) v *= base;
        }
        total += v;
    }
    return total;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        Rat c = t.c;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        bool has_vars = false;
        for (const auto& x : t.e) has_vars = has_vars || x != 0;
        if (c != 1 || !has_vars) os << c.get_str();
        bool started = c != 1 || !has_vars;
        for (size_t i = 0; i < t.e.size(); ++i) {
            if (t.e[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << var_names[i];
            if (t.e[i] != 1) os << "^" << t.e[i].get_str();
        }
    }
    return os.str();
}

Rat parse_rational(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string rational_string(const Rat& q) { return q.get_str(); }

}  // namespace coxcalc
