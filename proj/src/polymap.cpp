#include "algpoly/polymap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "algpoly/scalarize.hpp"

namespace algpoly {

WordPtr Word::make_const(Element v) {
    auto w = std::make_shared<Word>();
    w->kind = Kind::Const;
    w->value = std::move(v);
    return w;
}

WordPtr Word::make_var(int v) {
    if (v < 0) throw std::invalid_argument("variable index must be nonnegative");
    auto w = std::make_shared<Word>();
    w->kind = Kind::Var;
    w->var = v;
    return w;
}

WordPtr Word::make_prod(WordPtr l, WordPtr r) {
    if (!l || !r) throw std::invalid_argument("null word operand");
    auto w = std::make_shared<Word>();
    w->kind = Kind::Prod;
    w->left = std::move(l);
    w->right = std::move(r);
    return w;
}

int Word::var_leaf_count() const {
    switch (kind) {
        case Kind::Const: return 0;
        case Kind::Var: return 1;
        case Kind::Prod: return left->var_leaf_count() + right->var_leaf_count();
    }
    return 0;
}

int Word::max_var_index() const {
    switch (kind) {
        case Kind::Const: return -1;
        case Kind::Var: return var;
        case Kind::Prod: return std::max(left->max_var_index(), right->max_var_index());
    }
    return -1;
}

bool words_equal(const Word& a, const Word& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Word::Kind::Const: return a.value == b.value;
        case Word::Kind::Var: return a.var == b.var;
        case Word::Kind::Prod:
            return words_equal(*a.left, *b.left) && words_equal(*a.right, *b.right);
    }
    return false;
}

bool PolynomialMap::structurally_equal(const PolynomialMap& other) const {
    if (nvars != other.nvars || terms.size() != other.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
        if (terms[i].coeff != other.terms[i].coeff ||
            !words_equal(*terms[i].word, *other.terms[i].word))
            return false;
    return true;
}

namespace {

Element eval_word(const Algebra& alg, const Word& w, const std::vector<Element>& args) {
    switch (w.kind) {
        case Word::Kind::Const: return w.value;
        case Word::Kind::Var:
            if (w.var >= static_cast<int>(args.size()))
                throw std::invalid_argument("variable index exceeds argument tuple");
            return args[w.var];
        case Word::Kind::Prod:
            return multiply(alg, eval_word(alg, *w.left, args), eval_word(alg, *w.right, args));
    }
    throw std::logic_error("unreachable");
}

ElementD eval_word_numeric(const Algebra& alg, const Word& w, const std::vector<ElementD>& args) {
    switch (w.kind) {
        case Word::Kind::Const: return to_numeric(w.value);
        case Word::Kind::Var:
            if (w.var >= static_cast<int>(args.size()))
                throw std::invalid_argument("variable index exceeds argument tuple");
            return args[w.var];
        case Word::Kind::Prod:
            return multiply_numeric(alg, eval_word_numeric(alg, *w.left, args),
                                    eval_word_numeric(alg, *w.right, args));
    }
    throw std::logic_error("unreachable");
}

} // namespace

Element evaluate(const PolynomialMap& p, const std::vector<Element>& args) {
    if (static_cast<int>(args.size()) != p.nvars)
        throw std::invalid_argument("argument tuple length does not match nvars");
    Element acc = zero_element(*p.alg);
    for (const auto& t : p.terms)
        acc = add(acc, scale(t.coeff, eval_word(*p.alg, *t.word, args)));
    return acc;
}

ElementD evaluate_numeric(const PolynomialMap& p, const std::vector<ElementD>& args) {
    if (static_cast<int>(args.size()) != p.nvars)
        throw std::invalid_argument("argument tuple length does not match nvars");
    ElementD acc(p.alg->dim, {0.0, 0.0});
    for (const auto& t : p.terms) {
        ElementD v = eval_word_numeric(*p.alg, *t.word, args);
        auto c = t.coeff.to_complex();
        for (int i = 0; i < p.alg->dim; ++i) acc[i] += c * v[i];
    }
    return acc;
}

int syntactic_degree(const PolynomialMap& p) {
    int d = -1;
    for (const auto& t : p.terms) d = std::max(d, t.word->var_leaf_count());
    return d;
}

HomogeneousDecomposition decompose(const PolynomialMap& p) {
    std::map<int, PolynomialMap> groups;
    for (const auto& t : p.terms) {
        int d = t.word->var_leaf_count();
        auto it = groups.find(d);
        if (it == groups.end()) {
            PolynomialMap comp{p.alg, p.nvars, {}};
            it = groups.emplace(d, std::move(comp)).first;
        }
        it->second.terms.push_back(t);
    }
    HomogeneousDecomposition dec;
    Subspace full = full_subspace(p.alg);
    for (auto& [d, comp] : groups) {
        if (is_semantically_zero(comp, full)) continue;
        dec.components.emplace(d, std::move(comp));
    }
    if (!dec.components.empty()) {
        dec.semantic_degree = dec.components.rbegin()->first;
        dec.leading_form = dec.components.rbegin()->second;
    } else {
        dec.leading_form = zero_map(p.alg, p.nvars);
    }
    return dec;
}

namespace {

Rat const_norm_sq_product(const Word& w) {
    switch (w.kind) {
        case Word::Kind::Const: return norm_sq_exact(w.value);
        case Word::Kind::Var: return Rat(1);
        case Word::Kind::Prod:
            return const_norm_sq_product(*w.left) * const_norm_sq_product(*w.right);
    }
    return Rat(1);
}

} // namespace

Rat monomial_norm_sq_exact(const Algebra& alg, const Word& w, const Scalar& coeff) {
    if (!alg.has_composition_norm)
        throw std::domain_error("monomial norm requires a composition norm");
    return coeff.norm_sq() * const_norm_sq_product(w);
}

double monomial_norm(const Algebra& alg, const Word& w, const Scalar& coeff) {
    return std::sqrt(monomial_norm_sq_exact(alg, w, coeff).get_d());
}

bool check_self_adjoint(const PolynomialMap& p) {
    const Algebra& alg = *p.alg;
    if (!alg.involution) throw std::domain_error("algebra has no involution");
    const int d = alg.dim, n = p.nvars;
    VariableAtlas atlas{d, n};
    // generic arguments: arg l has ambient coordinates lambda_{kl}
    std::vector<std::vector<MultiPoly>> args(n);
    for (int l = 0; l < n; ++l) {
        args[l].assign(d, MultiPoly(atlas.nvars()));
        for (int k = 0; k < d; ++k)
            args[l][k] = MultiPoly::variable(atlas.nvars(), atlas.flat(k, l));
    }
    // arguments with the involution applied coordinate-wise
    const auto& inv = *alg.involution;
    std::vector<std::vector<MultiPoly>> args_star(n);
    for (int l = 0; l < n; ++l) {
        args_star[l].assign(d, MultiPoly(atlas.nvars()));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (!inv[i * d + j].is_zero())
                    args_star[l][i] = args_star[l][i] + inv[i * d + j] * args[l][j];
    }
    auto pa = scalarize_ambient(p, args, atlas.nvars());        // p(a)
    auto pastar = scalarize_ambient(p, args_star, atlas.nvars()); // p(a*)
    // (p(a))* coordinatewise
    std::vector<MultiPoly> pa_star(d, MultiPoly(atlas.nvars()));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!inv[i * d + j].is_zero()) pa_star[i] = pa_star[i] + inv[i * d + j] * pa[j];
    for (int i = 0; i < d; ++i)
        if (pa_star[i] != pastar[i]) return false;
    return true;
}

PolynomialMap zero_map(const AlgebraPtr& alg, int nvars) { return PolynomialMap{alg, nvars, {}}; }

PolynomialMap identity_map(const AlgebraPtr& alg) {
    return PolynomialMap{alg, 1, {Term{Scalar(1), Word::make_var(0)}}};
}

WordPtr power_word(int var, int d) {
    if (d < 1) throw std::invalid_argument("power must be >= 1");
    WordPtr w = Word::make_var(var);
    for (int i = 1; i < d; ++i) w = Word::make_prod(w, Word::make_var(var));
    return w;
}

} // namespace algpoly
