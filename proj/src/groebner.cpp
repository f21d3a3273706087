#include "algpoly/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "algpoly/sturm.hpp"

namespace algpoly {

MonomialOrder MonomialOrder::lex(int nvars) {
    MonomialOrder o;
    o.kind = Kind::Lex;
    o.perm.resize(nvars);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::grevlex(int nvars) {
    MonomialOrder o;
    o.kind = Kind::Grevlex;
    o.perm.resize(nvars);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    return o;
}

MonomialOrder MonomialOrder::elimination(int nvars, const std::vector<int>& eliminated) {
    MonomialOrder o;
    o.kind = Kind::Lex;
    std::vector<bool> used(nvars, false);
    for (int v : eliminated) {
        o.perm.push_back(v);
        used[v] = true;
    }
    for (int v = 0; v < nvars; ++v)
        if (!used[v]) o.perm.push_back(v);
    return o;
}

int MonomialOrder::compare(const ExpVec& a, const ExpVec& b) const {
    if (kind == Kind::Lex) {
        for (int v : perm) {
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
        return 0;
    }
    int da = expvec_degree(a), db = expvec_degree(b);
    if (da != db) return da < db ? -1 : 1;
    // grevlex tie-break: smaller exponent in the last differing variable wins
    for (auto it = perm.rbegin(); it != perm.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
}

namespace {

// Term-list representation sorted descending by the active order.
struct OPoly {
    std::vector<std::pair<ExpVec, Scalar>> t;
    bool zero() const { return t.empty(); }
    const ExpVec& lm() const { return t.front().first; }
    const Scalar& lc() const { return t.front().second; }
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : t) d = std::max(d, expvec_degree(e));
        return d;
    }
};

OPoly to_opoly(const MultiPoly& p, const MonomialOrder& ord) {
    OPoly o;
    o.t.assign(p.terms().begin(), p.terms().end());
    std::sort(o.t.begin(), o.t.end(),
              [&](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
    return o;
}

MultiPoly to_multipoly(const OPoly& o, int nvars) {
    MultiPoly p(nvars);
    for (const auto& [e, c] : o.t) p.add_term(e, c);
    return p;
}

bool divides(const ExpVec& a, const ExpVec& b) { // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVec quotient(const ExpVec& b, const ExpVec& a) {
    ExpVec q(b.size());
    for (size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

ExpVec lcm_exp(const ExpVec& a, const ExpVec& b) {
    ExpVec l(a.size());
    for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

// f -= c * x^m * g, keeping f sorted. Linear merge.
void axpy_mono(OPoly& f, const Scalar& c, const ExpVec& m, const OPoly& g,
               const MonomialOrder& ord) {
    std::vector<std::pair<ExpVec, Scalar>> sub;
    sub.reserve(g.t.size());
    for (const auto& [e, k] : g.t) {
        ExpVec em(e.size());
        for (size_t i = 0; i < e.size(); ++i) em[i] = e[i] + m[i];
        sub.emplace_back(std::move(em), c * k);
    }
    std::vector<std::pair<ExpVec, Scalar>> out;
    out.reserve(f.t.size() + sub.size());
    size_t i = 0, j = 0;
    while (i < f.t.size() || j < sub.size()) {
        if (j == sub.size() || (i < f.t.size() && ord.compare(f.t[i].first, sub[j].first) > 0)) {
            out.push_back(std::move(f.t[i++]));
        } else if (i == f.t.size() || ord.compare(f.t[i].first, sub[j].first) < 0) {
            out.emplace_back(sub[j].first, -sub[j].second);
            ++j;
        } else {
            Scalar d = f.t[i].second - sub[j].second;
            if (!d.is_zero()) out.emplace_back(f.t[i].first, std::move(d));
            ++i;
            ++j;
        }
    }
    f.t = std::move(out);
}

// Full normal form of f modulo basis.
OPoly nf(OPoly f, const std::vector<OPoly>& basis, const MonomialOrder& ord) {
    OPoly rem;
    while (!f.zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.zero()) continue;
            if (divides(g.lm(), f.lm())) {
                Scalar c = f.lc() / g.lc();
                axpy_mono(f, c, quotient(f.lm(), g.lm()), g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.t.push_back(f.t.front());
            f.t.erase(f.t.begin());
        }
    }
    return rem;
}

void make_monic(OPoly& p) {
    if (p.zero()) return;
    Scalar inv = Scalar(1) / p.lc();
    for (auto& [e, c] : p.t) c = inv * c;
}

} // namespace

bool GroebnerBasis::is_trivial_unit() const {
    return polys.size() == 1 && polys[0].total_degree() == 0 && !polys[0].is_zero();
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                         const BuchbergerLimits& limits) {
    int nvars = gens.empty() ? 0 : gens.front().nvars();
    for (const auto& g : gens)
        if (g.nvars() != nvars) throw std::invalid_argument("generators disagree on nvars");

    std::vector<OPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        OPoly o = to_opoly(g, order);
        make_monic(o);
        basis.push_back(std::move(o));
    }

    struct Pair {
        size_t i, j;
        int lcm_deg;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::vector<Pair> queue;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i)
            queue.push_back({i, j, expvec_degree(lcm_exp(basis[i].lm(), basis[j].lm()))});
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pr = *it;
        queue.erase(it);
        const OPoly& f = basis[pr.i];
        const OPoly& g = basis[pr.j];
        ExpVec l = lcm_exp(f.lm(), g.lm());
        // Buchberger's coprimality criterion
        ExpVec sum(f.lm().size());
        for (size_t v = 0; v < sum.size(); ++v) sum[v] = f.lm()[v] + g.lm()[v];
        if (sum == l) continue;
        // S-polynomial (both monic)
        OPoly s;
        axpy_mono(s, Scalar(-1), quotient(l, f.lm()), f, order);
        axpy_mono(s, Scalar(1), quotient(l, g.lm()), g, order);
        OPoly r = nf(std::move(s), basis, order);
        if (r.zero()) continue;
        if (r.degree() > limits.max_degree)
            throw GuardExceeded("Groebner degree guard exceeded (" +
                                std::to_string(r.degree()) + " > " +
                                std::to_string(limits.max_degree) + ")");
        make_monic(r);
        basis.push_back(std::move(r));
        if (static_cast<int>(basis.size()) > limits.max_basis)
            throw GuardExceeded("Groebner basis size guard exceeded");
        push_pairs_for(basis.size() - 1);
    }

    // interreduce: drop polys whose LM is divisible by another's, then fully
    // reduce each modulo the rest and normalize.
    std::vector<OPoly> kept;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (divides(basis[j].lm(), basis[i].lm()) &&
                (!divides(basis[i].lm(), basis[j].lm()) || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(basis[i]);
    }
    std::vector<OPoly> reduced;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<OPoly> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        OPoly r = nf(kept[i], others, order);
        if (!r.zero()) {
            make_monic(r);
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const OPoly& a, const OPoly& b) { return order.compare(a.lm(), b.lm()) > 0; });

    GroebnerBasis gb;
    gb.order = order;
    for (const auto& o : reduced) gb.polys.push_back(to_multipoly(o, nvars));
    return gb;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
    std::vector<OPoly> basis;
    for (const auto& p : gb.polys) basis.push_back(to_opoly(p, gb.order));
    OPoly r = nf(to_opoly(f, gb.order), basis, gb.order);
    return to_multipoly(r, f.nvars());
}

std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens, const std::vector<int>& keep,
                                 const BuchbergerLimits& limits) {
    int nvars = 0;
    for (const auto& g : gens) nvars = std::max(nvars, g.nvars());
    std::vector<bool> kept(nvars, false);
    for (int v : keep) kept[v] = true;
    std::vector<int> eliminated;
    for (int v = 0; v < nvars; ++v)
        if (!kept[v]) eliminated.push_back(v);
    GroebnerBasis gb = buchberger(gens, MonomialOrder::elimination(nvars, eliminated), limits);
    std::vector<MultiPoly> out;
    for (const auto& p : gb.polys)
        if (p.involves_only(kept)) out.push_back(p);
    return out;
}

// ---- certificates ------------------------------------------------------------

namespace {

Certificate inconclusive(std::string reason) {
    Certificate c;
    c.kind = Certificate::Kind::Inconclusive;
    c.reason = std::move(reason);
    return c;
}

} // namespace

Certificate nondegenerate_complex(const ScalarizedSystem& leading_forms,
                                  const BuchbergerLimits& limits) {
    const int nv = leading_forms.poly_nvars();
    for (const auto& p : leading_forms.polys)
        if (!p.is_homogeneous())
            throw std::invalid_argument("nondegenerate_complex requires a homogeneous system");
    GroebnerBasis gb;
    try {
        gb = buchberger(leading_forms.polys, MonomialOrder::grevlex(nv), limits);
    } catch (const GuardExceeded& e) {
        return inconclusive(std::string("Groebner guard: ") + e.what());
    }
    std::vector<ExpVec> pure(nv);
    bool all = true;
    for (int v = 0; v < nv; ++v) {
        bool found = false;
        for (const auto& p : gb.polys) {
            OPoly o = to_opoly(p, gb.order);
            if (o.zero()) continue;
            const ExpVec& lm = o.lm();
            bool pure_v = lm[v] > 0;
            for (int u = 0; u < nv && pure_v; ++u)
                if (u != v && lm[u] > 0) pure_v = false;
            if (pure_v) {
                pure[v] = lm;
                found = true;
                break;
            }
        }
        if (!found) { all = false; break; }
    }
    if (all) {
        Certificate c;
        c.kind = Certificate::Kind::Nondegenerate;
        c.method = "groebner-zero-dim";
        c.gb = std::move(gb);
        c.pure_power_leading_monomials = std::move(pure);
        return c;
    }
    // exact witness attempt: standard basis vectors
    for (int v = 0; v < nv; ++v) {
        std::vector<Scalar> pt(nv, Scalar{});
        pt[v] = Scalar(1);
        bool zero = true;
        for (const auto& p : leading_forms.polys)
            if (!p.eval(pt).is_zero()) { zero = false; break; }
        if (zero) {
            Certificate c;
            c.kind = Certificate::Kind::DegenerateWitness;
            c.method = "exact-basis-witness";
            c.witness = std::move(pt);
            c.witness_is_exact = true;
            c.gb = std::move(gb);
            return c;
        }
    }
    Certificate c = inconclusive(
        "leading ideal is not zero-dimensional at the origin over the closure, "
        "but no exact witness was found; try the numeric probe");
    c.gb = std::move(gb);
    return c;
}

Certificate certify_nondegenerate_real(const ScalarizedSystem& leading_forms,
                                       const BuchbergerLimits& limits) {
    const int nv = leading_forms.poly_nvars();
    for (const auto& p : leading_forms.polys)
        if (!p.is_homogeneous())
            throw std::invalid_argument("certify_nondegenerate_real requires a homogeneous system");
    // adjoin the unit sphere; a nonzero real zero scales onto it
    MultiPoly sphere(nv);
    for (int v = 0; v < nv; ++v) {
        ExpVec e(nv, 0);
        e[v] = 2;
        sphere.add_term(e, Scalar(1));
    }
    sphere.add_term(ExpVec(nv, 0), Scalar(-1));
    ScalarizedSystem aug = leading_forms;
    aug.polys.push_back(sphere);
    Certificate c = certify_no_real_zero(aug, limits);
    if (c.kind == Certificate::Kind::NoRealZero) {
        c.kind = Certificate::Kind::Nondegenerate;
        c.method = "sphere-groebner";
    }
    return c;
}

Certificate certify_no_real_zero(const ScalarizedSystem& sys, const BuchbergerLimits& limits) {
    const int nv = sys.poly_nvars();
    for (const auto& p : sys.polys)
        for (const auto& [e, c] : p.terms())
            if (!c.is_real())
                throw std::invalid_argument("real certification requires real coefficients");
    try {
        GroebnerBasis g0 = buchberger(sys.polys, MonomialOrder::grevlex(nv), limits);
        if (g0.is_trivial_unit()) {
            Certificate c;
            c.kind = Certificate::Kind::NoRealZero;
            c.method = "groebner-unit-ideal";
            c.gb = std::move(g0);
            c.eliminant = MultiPoly::constant(nv, Scalar(1));
            c.sturm_root_count = 0;
            return c;
        }
    } catch (const GuardExceeded&) {
        // fall through to per-variable elimination
    }
    std::string notes;
    for (int v = nv - 1; v >= 0; --v) {
        std::vector<MultiPoly> elim;
        try {
            elim = eliminate(sys.polys, {v}, limits);
        } catch (const GuardExceeded& e) {
            notes += std::string("var ") + std::to_string(v + 1) + ": guard (" + e.what() + "); ";
            continue;
        }
        for (const auto& q : elim) {
            if (q.is_zero()) continue;
            if (q.total_degree() == 0) {
                // nonzero constant in the ideal: no solutions at all
                Certificate c;
                c.kind = Certificate::Kind::NoRealZero;
                c.method = "groebner-unit-ideal";
                c.eliminant = q;
                c.sturm_root_count = 0;
                return c;
            }
            int count = sturm_count(q, v);
            if (count == 0) {
                Certificate c;
                c.kind = Certificate::Kind::NoRealZero;
                c.method = "eliminant-sturm";
                c.eliminant_variable = v;
                c.eliminant = q;
                c.sturm_root_count = 0;
                return c;
            }
            notes += "var " + std::to_string(v + 1) + ": eliminant has " + std::to_string(count) +
                     " real roots; ";
        }
        if (elim.empty()) notes += "var " + std::to_string(v + 1) + ": no eliminant; ";
    }
    return inconclusive(notes.empty() ? "no certifying eliminant found" : notes);
}

std::string Certificate::to_json() const {
    nlohmann::json j;
    switch (kind) {
        case Kind::Nondegenerate: j["kind"] = "nondegenerate"; break;
        case Kind::DegenerateWitness: j["kind"] = "degenerate-witness"; break;
        case Kind::NoRealZero: j["kind"] = "no-real-zero"; break;
        case Kind::Inconclusive: j["kind"] = "inconclusive"; break;
    }
    j["method"] = method;
    if (!reason.empty()) j["reason"] = reason;
    if (gb) {
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& p : gb->polys) basis.push_back(p.to_string());
        j["groebner_basis"] = std::move(basis);
        j["groebner_basis_size"] = gb->polys.size();
    }
    if (!pure_power_leading_monomials.empty()) {
        nlohmann::json pp = nlohmann::json::array();
        for (const auto& e : pure_power_leading_monomials) pp.push_back(e);
        j["pure_power_leading_monomials"] = std::move(pp);
    }
    if (!witness.empty()) {
        std::vector<std::string> w;
        for (const auto& c : witness) w.push_back(c.to_string());
        j["witness"] = w;
        j["witness_exact"] = witness_is_exact;
    }
    if (!witness_numeric.empty()) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& c : witness_numeric) w.push_back({c.real(), c.imag()});
        j["witness_numeric"] = std::move(w);
    }
    if (eliminant) {
        j["eliminant"] = eliminant->to_string();
        j["eliminant_variable"] = eliminant_variable + 1;
        j["sturm_root_count"] = sturm_root_count;
    }
    return j.dump(2);
}

} // namespace algpoly
