#include "algpoly/sturm.hpp"

#include <stdexcept>

namespace algpoly {

namespace {

void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

} // namespace

int uni_degree(const UniPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
    trim(d);
    return d;
}

UniPoly uni_rem(const UniPoly& a, const UniPoly& b) {
    int db = uni_degree(b);
    if (db < 0) throw std::domain_error("remainder by zero polynomial");
    UniPoly r = a;
    trim(r);
    while (uni_degree(r) >= db) {
        int dr = uni_degree(r);
        Rat f = r[dr] / b[db];
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b[i];
        trim(r);
    }
    return r;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    trim(a);
    trim(b);
    while (uni_degree(b) >= 0) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = uni_degree(a);
    if (d >= 0) {
        Rat lc = a[d];
        for (auto& c : a) c /= lc;
    }
    return a;
}

UniPoly uni_squarefree_part(const UniPoly& p) {
    UniPoly g = uni_gcd(p, uni_derivative(p));
    int dg = uni_degree(g);
    if (dg <= 0) {
        UniPoly r = p;
        trim(r);
        return r;
    }
    // exact division p / g
    UniPoly r = p, q;
    trim(r);
    int dr = uni_degree(r);
    q.assign(dr - dg + 1, Rat(0));
    while ((dr = uni_degree(r)) >= dg) {
        Rat f = r[dr] / g[dg];
        q[dr - dg] = f;
        for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= f * g[i];
    }
    trim(q);
    return q;
}

Rat uni_eval(const UniPoly& p, const Rat& x) {
    Rat acc(0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

SturmChain sturm_chain(const UniPoly& squarefree) {
    SturmChain ch;
    UniPoly p0 = squarefree;
    trim(p0);
    if (uni_degree(p0) < 0) throw std::domain_error("Sturm chain of the zero polynomial");
    ch.polys.push_back(p0);
    UniPoly p1 = uni_derivative(p0);
    if (uni_degree(p1) < 0) return ch; // constant input
    ch.polys.push_back(p1);
    while (true) {
        const UniPoly& a = ch.polys[ch.polys.size() - 2];
        const UniPoly& b = ch.polys.back();
        UniPoly r = uni_rem(a, b);
        if (uni_degree(r) < 0) break;
        for (auto& c : r) c = -c;
        ch.polys.push_back(std::move(r));
    }
    return ch;
}

namespace {

// sign of p at +inf (limit sign) or -inf
int sign_at_inf(const UniPoly& p, bool plus) {
    int d = uni_degree(p);
    if (d < 0) return 0;
    int s = sgn(p[d]);
    if (!plus && (d % 2 == 1)) s = -s;
    return s;
}

int variations_at(const SturmChain& ch, const std::optional<Rat>& x, bool plus_inf) {
    int count = 0, prev = 0;
    for (const auto& p : ch.polys) {
        int s = x ? sgn(uni_eval(p, *x)) : sign_at_inf(p, plus_inf);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

int sturm_count(const UniPoly& q, const Interval& iv) {
    UniPoly sf = uni_squarefree_part(q);
    if (uni_degree(sf) < 0) throw std::domain_error("sturm_count of the zero polynomial");
    if (uni_degree(sf) == 0) return 0;
    SturmChain ch = sturm_chain(sf);
    // V(lo) - V(hi) counts distinct roots in (lo, hi]; add lo if it is a root.
    int vlo = iv.lo ? variations_at(ch, iv.lo, false) : variations_at(ch, std::nullopt, false);
    int vhi = iv.hi ? variations_at(ch, iv.hi, true) : variations_at(ch, std::nullopt, true);
    int n = vlo - vhi;
    if (iv.lo && uni_eval(sf, *iv.lo) == 0) ++n;
    return n;
}

int sturm_count(const MultiPoly& q, int var, const Interval& iv) {
    std::vector<Scalar> coeffs = q.to_univariate(var);
    UniPoly p;
    for (const auto& c : coeffs) {
        if (!c.is_real())
            throw std::domain_error("sturm_count requires real coefficients");
        p.push_back(c.re);
    }
    return sturm_count(p, iv);
}

} // namespace algpoly
