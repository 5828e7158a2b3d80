#ifndef HODGEPOLY_TESTS_ORACLE_HPP
#define HODGEPOLY_TESTS_ORACLE_HPP

// Small dense reference arithmetic used as an independent oracle. Nothing
// here touches the library's polynomial or series types.

#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "hodgepoly/laurent.hpp"

namespace oracle {

struct Poly {
    std::map<std::pair<int, int>, long long> c;

    Poly() = default;
    Poly(long long k)
    {
        if (k)
            c[{0, 0}] = k;
    }
    Poly(std::initializer_list<std::tuple<long long, int, int>> terms)
    {
        for (auto [k, u, v] : terms)
            add(u, v, k);
    }

    void add(int u, int v, long long k)
    {
        if ((c[{u, v}] += k) == 0)
            c.erase({u, v});
    }

    friend Poly operator+(Poly a, const Poly& b)
    {
        for (auto& [m, k] : b.c)
            a.add(m.first, m.second, k);
        return a;
    }
    friend Poly operator-(Poly a, const Poly& b)
    {
        for (auto& [m, k] : b.c)
            a.add(m.first, m.second, -k);
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        for (auto& [m, k] : a.c)
            for (auto& [n, l] : b.c)
                r.add(m.first + n.first, m.second + n.second, k * l);
        return r;
    }
    friend bool operator==(const Poly&, const Poly&) = default;
};

inline Poly mono(long long k, int u, int v) { return Poly{{k, u, v}}; }
inline Poly uv(int k) { return mono(1, k, k); }
inline const Poly U = mono(1, 1, 0);
inline const Poly V = mono(1, 0, 1);

inline Poly power(const Poly& p, int k)
{
    Poly r = 1;
    for (int i = 0; i < k; ++i)
        r = r * p;
    return r;
}

/// 1 + uv + ... + (uv)^{n-1}
inline Poly geo(int n)
{
    Poly r;
    for (int i = 0; i < n; ++i)
        r = r + uv(i);
    return r;
}

inline Poly jac(int g) { return power(1 + U, g) * power(1 + V, g); }

inline long long binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// x^k coefficient of (1+ux)^g (1+vx)^g / ((1-x)(1-uvx)), by summing over
/// all ways to split k among the four factors.
inline Poly sym(int g, int k)
{
    Poly r;
    for (int i = 0; i <= g; ++i)
        for (int j = 0; j <= g; ++j)
            for (int a = 0; i + j + a <= k; ++a) {
                int b = k - i - j - a;
                r.add(i + b, j + b, binom(g, i) * binom(g, j));
            }
    return r;
}

inline Poly from(const hodge::LaurentPoly& p)
{
    Poly r;
    for (const auto& [m, k] : p.terms())
        r.add(m.u, m.v, k.get_si());
    return r;
}

/// Poincare polynomial as a map t-exponent -> coefficient.
inline std::map<int, long long> diagonal(const Poly& p)
{
    std::map<int, long long> r;
    for (auto& [m, k] : p.c)
        if ((r[m.first + m.second] += k) == 0)
            r.erase(m.first + m.second);
    return r;
}

inline std::map<int, long long> from(const hodge::UniPoly& p)
{
    std::map<int, long long> r;
    for (const auto& [e, k] : p.terms())
        r[e] = k.get_si();
    return r;
}

inline std::string show(const Poly& p)
{
    std::ostringstream os;
    for (auto& [m, k] : p.c)
        os << " +" << k << "*u^" << m.first << "v^" << m.second;
    return os.str();
}

// Rank (1,2) chamber formula evaluated with plain dense arithmetic: the x^N
// coefficient is expanded as an explicit finite sum.
inline Poly rank12(int g, int d1, int d2, int d0)
{
    const int N = d1 - d2 - d0;
    if (N < 0)
        return {};
    // x^k coefficient of (1+ux)^g(1+vx)^g/((1-x)(1-uvx)) is sym(g,k).
    auto tail = [](int shift, int k) {  // x^k coefficient of 1/(1 - (uv)^shift x)
        return uv(shift * k);
    };
    Poly a, b;
    for (int k = 0; k <= N; ++k) {
        a = a + sym(g, k) * tail(-1, N - k);
        b = b + sym(g, k) * tail(2, N - k);
    }
    Poly num = uv(N) * a - uv(d2 + g - 1 + 2 * d0) * b;
    // Divide by 1 - uv: along each class u - v = const the quotient
    // coefficients are the running sums of the numerator's coefficients.
    std::map<int, std::map<int, long long>> classes;
    for (auto& [m, k] : num.c)
        classes[m.first - m.second][m.first] += k;
    Poly q;
    for (auto& [diff, row] : classes) {
        long long acc = 0;
        for (int e = row.begin()->first; e <= row.rbegin()->first; ++e) {
            auto it = row.find(e);
            acc += it == row.end() ? 0 : it->second;
            if (acc != 0)
                q.add(e, e - diff, acc);
        }
        if (acc != 0)
            throw std::logic_error("rank (1,2) numerator not divisible by 1 - uv");
    }
    return q * power(jac(g), 2);
}

} // namespace oracle

#endif
