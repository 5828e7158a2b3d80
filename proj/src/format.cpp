#include "hodgepoly/format.hpp"

#include <vector>

namespace hodge {

namespace {

struct Style {
    bool latex;
};

std::string power(const std::string& base, int exp, Style st)
{
    if (exp == 1)
        return base;
    std::string e = std::to_string(exp);
    return base + "^" + (st.latex ? "{" + e + "}" : e);
}

std::string monomial_text(int a, int b, Style st)
{
    if (a == 0 && b == 0)
        return "";
    if (a == b)
        return a == 1 ? "uv" : power("(uv)", a, st);
    std::vector<std::string> parts;
    if (a != 0)
        parts.push_back(power("u", a, st));
    if (b != 0)
        parts.push_back(power("v", b, st));
    if (parts.size() == 1)
        return parts[0];
    return parts[0] + (st.latex ? "" : " ") + parts[1];
}

// Joins (coefficient, monomial) pairs as a signed sum.
template <typename Terms, typename MonoFn>
std::string join_terms(const Terms& terms, MonoFn mono, Style st)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const bool negative = sgn(c) < 0;
        mpz_class mag = abs(c);
        std::string mtext = mono(m);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (mtext.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mtext;
        else
            out += mag.get_str() + (st.latex ? "" : " ") + mtext;
    }
    return out;
}

std::string laurent_format(const LaurentPoly& p, Style st)
{
    return join_terms(p.terms(), [st](const Monomial& m) { return monomial_text(m.u, m.v, st); }, st);
}

std::string uni_format(const UniPoly& p, Style st)
{
    return join_terms(p.terms(), [st](int e) { return e == 0 ? std::string() : power("t", e, st); }, st);
}

} // namespace

std::string to_text(const LaurentPoly& p) { return laurent_format(p, {false}); }
std::string to_text(const UniPoly& p) { return uni_format(p, {false}); }
std::string to_latex(const LaurentPoly& p) { return laurent_format(p, {true}); }
std::string to_latex(const UniPoly& p) { return uni_format(p, {true}); }

} // namespace hodge
