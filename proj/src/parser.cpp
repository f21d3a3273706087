#include "algpoly/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace algpoly {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '#') { // line comment
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) t += s[i++];
            if (i < s.size() && s[i] == '/') {
                size_t save = i;
                std::string den;
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
                if (den.empty()) throw ParseError("malformed rational", save, "digits after '/'");
                t += "/" + den;
            }
            out.push_back({Token::Kind::Number, t, start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                t += s[i++];
            out.push_back({Token::Kind::Ident, t, start});
            continue;
        }
        switch (c) {
            case '+': out.push_back({Token::Kind::Plus, "+", i}); break;
            case '-': out.push_back({Token::Kind::Minus, "-", i}); break;
            case '*': out.push_back({Token::Kind::Star, "*", i}); break;
            case '^': out.push_back({Token::Kind::Caret, "^", i}); break;
            case '(': out.push_back({Token::Kind::LParen, "(", i}); break;
            case ')': out.push_back({Token::Kind::RParen, ")", i}); break;
            default: throw ParseError(std::string("unknown symbol '") + c + "'", i);
        }
        ++i;
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

// Parse-time value: a scalar, a constant element, or a general term list.
struct PVal {
    enum class Kind { ScalarV, ElemV, MapV };
    Kind kind;
    Scalar s;
    Element e;
    std::vector<Term> terms;
};

class Parser {
  public:
    Parser(const MapSource& src) : src_(src), toks_(tokenize(src.text)) {
        for (size_t i = 0; i < src.algebra->basis_labels.size(); ++i)
            label_index_[src.algebra->basis_labels[i]] = static_cast<int>(i);
    }

    PVal parse() {
        PVal v = expr();
        if (cur().kind != Token::Kind::End) {
            if (cur().kind == Token::Kind::RParen)
                throw ParseError("unbalanced parentheses", cur().pos);
            throw ParseError("trailing input", cur().pos, "end of input");
        }
        return v;
    }

    PolynomialMap finalize(PVal v) {
        PolynomialMap p{src_.algebra, src_.nvars, {}};
        switch (v.kind) {
            case PVal::Kind::ScalarV: {
                if (v.s.is_zero()) return p;
                p.terms.push_back({Scalar(1), Word::make_const(scalar_to_element(v.s))});
                return p;
            }
            case PVal::Kind::ElemV:
                if (!is_zero(v.e)) p.terms.push_back({Scalar(1), Word::make_const(v.e)});
                return p;
            case PVal::Kind::MapV:
                // canonical form: constant terms carry coefficient 1
                for (auto& t : v.terms)
                    if (t.word->kind == Word::Kind::Const && t.coeff != Scalar(1)) {
                        t.word = Word::make_const(scale(t.coeff, t.word->value));
                        t.coeff = Scalar(1);
                    }
                p.terms = std::move(v.terms);
                return p;
        }
        return p;
    }

    Element finalize_element(PVal v) {
        switch (v.kind) {
            case PVal::Kind::ScalarV: return scalar_to_element(v.s);
            case PVal::Kind::ElemV: return v.e;
            case PVal::Kind::MapV:
                throw ParseError("expression contains variables where a constant is required", 0);
        }
        throw std::logic_error("unreachable");
    }

  private:
    const MapSource& src_;
    std::vector<Token> toks_;
    size_t i_ = 0;
    std::map<std::string, int> label_index_;

    const Token& cur() const { return toks_[i_]; }
    void advance() { ++i_; }

    Element scalar_to_element(const Scalar& s) const {
        const Algebra& a = *src_.algebra;
        if (!a.unit)
            throw ParseError("scalar constant requires a unital algebra", cur().pos);
        return scale(s, *a.unit);
    }

    PVal as_map(PVal v) {
        if (v.kind == PVal::Kind::MapV) return v;
        PVal out;
        out.kind = PVal::Kind::MapV;
        Element e = (v.kind == PVal::Kind::ScalarV) ? scalar_to_element(v.s) : v.e;
        if (!is_zero(e)) out.terms.push_back({Scalar(1), Word::make_const(e)});
        return out;
    }

    PVal add(PVal a, PVal b, bool negate_b, size_t pos) {
        if (negate_b) b = negate(std::move(b));
        if (a.kind == PVal::Kind::ScalarV && b.kind == PVal::Kind::ScalarV)
            return PVal{PVal::Kind::ScalarV, a.s + b.s, {}, {}};
        if (a.kind != PVal::Kind::MapV && b.kind != PVal::Kind::MapV) {
            Element ea = a.kind == PVal::Kind::ElemV ? a.e : scalar_to_element(a.s);
            Element eb = b.kind == PVal::Kind::ElemV ? b.e : scalar_to_element(b.s);
            return PVal{PVal::Kind::ElemV, Scalar{}, algpoly::add(ea, eb), {}};
        }
        PVal ma = as_map(std::move(a)), mb = as_map(std::move(b));
        for (auto& t : mb.terms) ma.terms.push_back(std::move(t));
        (void)pos;
        return ma;
    }

    PVal negate(PVal v) {
        switch (v.kind) {
            case PVal::Kind::ScalarV: v.s = -v.s; return v;
            case PVal::Kind::ElemV: v.e = scale(Scalar(-1), v.e); return v;
            case PVal::Kind::MapV:
                for (auto& t : v.terms) t.coeff = -t.coeff;
                return v;
        }
        return v;
    }

    static WordPtr prod_fold(const WordPtr& l, const WordPtr& r, const Algebra& alg) {
        if (l->kind == Word::Kind::Const && r->kind == Word::Kind::Const)
            return Word::make_const(multiply(alg, l->value, r->value));
        return Word::make_prod(l, r);
    }

    PVal mul(PVal a, PVal b, size_t pos) {
        (void)pos;
        // field-scalar action
        if (a.kind == PVal::Kind::ScalarV || b.kind == PVal::Kind::ScalarV) {
            if (a.kind != PVal::Kind::ScalarV) std::swap(a, b);
            switch (b.kind) {
                case PVal::Kind::ScalarV:
                    return PVal{PVal::Kind::ScalarV, a.s * b.s, {}, {}};
                case PVal::Kind::ElemV:
                    return PVal{PVal::Kind::ElemV, Scalar{}, scale(a.s, b.e), {}};
                case PVal::Kind::MapV:
                    for (auto& t : b.terms) t.coeff = a.s * t.coeff;
                    return b;
            }
        }
        if (a.kind == PVal::Kind::ElemV && b.kind == PVal::Kind::ElemV)
            return PVal{PVal::Kind::ElemV, Scalar{},
                        multiply(*src_.algebra, a.e, b.e), {}};
        // distribute over term lists (bilinearity expansion)
        PVal ma = as_map(std::move(a)), mb = as_map(std::move(b));
        PVal out{PVal::Kind::MapV, {}, {}, {}};
        for (const auto& ta : ma.terms)
            for (const auto& tb : mb.terms)
                out.terms.push_back(
                    {ta.coeff * tb.coeff, prod_fold(ta.word, tb.word, *src_.algebra)});
        return out;
    }

    PVal expr() {
        bool lead_minus = false;
        if (cur().kind == Token::Kind::Minus) { lead_minus = true; advance(); }
        else if (cur().kind == Token::Kind::Plus) advance();
        PVal v = term();
        if (lead_minus) v = negate(std::move(v));
        while (cur().kind == Token::Kind::Plus || cur().kind == Token::Kind::Minus) {
            bool minus = cur().kind == Token::Kind::Minus;
            size_t pos = cur().pos;
            advance();
            v = add(std::move(v), term(), minus, pos);
        }
        return v;
    }

    PVal term() {
        PVal v = factor();
        while (cur().kind == Token::Kind::Star) {
            size_t pos = cur().pos;
            advance();
            v = mul(std::move(v), factor(), pos);
        }
        return v;
    }

    PVal factor() {
        bool neg = false;
        while (cur().kind == Token::Kind::Minus) { neg = !neg; advance(); }
        PVal v = primary();
        while (cur().kind == Token::Kind::Caret) {
            size_t pos = cur().pos;
            advance();
            if (cur().kind != Token::Kind::Number)
                throw ParseError("malformed exponent", cur().pos, "integer");
            long d = 0;
            try {
                if (cur().text.find('/') != std::string::npos) throw std::invalid_argument("");
                d = std::stol(cur().text);
            } catch (...) {
                throw ParseError("malformed exponent", cur().pos, "integer");
            }
            advance();
            if (d < 1) throw ParseError("exponent must be >= 1", pos);
            // left-nested power
            PVal base = v;
            for (long r = 1; r < d; ++r) v = mul(std::move(v), base, pos);
        }
        if (neg) v = negate(std::move(v));
        return v;
    }

    PVal primary() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::Kind::Number: {
                Scalar s;
                try {
                    s = Scalar(parse_rational(t.text));
                } catch (const std::exception&) {
                    throw ParseError("malformed rational", t.pos);
                }
                advance();
                return PVal{PVal::Kind::ScalarV, s, {}, {}};
            }
            case Token::Kind::Ident: {
                advance();
                // variables first: x == x1, then x2..xn
                if (t.text == "x" || (t.text[0] == 'x' && t.text.size() > 1 &&
                                      std::all_of(t.text.begin() + 1, t.text.end(), [](char c) {
                                          return std::isdigit(static_cast<unsigned char>(c));
                                      }))) {
                    int idx = t.text == "x" ? 1 : std::stoi(t.text.substr(1));
                    if (idx < 1 || idx > src_.nvars)
                        throw ParseError("variable index exceeds nvars=" +
                                             std::to_string(src_.nvars),
                                         t.pos);
                    PVal v{PVal::Kind::MapV, {}, {}, {}};
                    v.terms.push_back({Scalar(1), Word::make_var(idx - 1)});
                    return v;
                }
                auto it = label_index_.find(t.text);
                if (it == label_index_.end())
                    throw ParseError("unknown symbol '" + t.text + "'", t.pos,
                                     "variable or basis label");
                return PVal{PVal::Kind::ElemV, Scalar{},
                            basis_element(*src_.algebra, it->second), {}};
            }
            case Token::Kind::LParen: {
                advance();
                PVal v = expr();
                if (cur().kind != Token::Kind::RParen)
                    throw ParseError("unbalanced parentheses", cur().pos, "')'");
                advance();
                return v;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.pos,
                                 "number, symbol or '('");
        }
    }
};

} // namespace

PolynomialMap parse_map(const MapSource& src) {
    if (src.nvars < 1) throw std::invalid_argument("nvars must be >= 1");
    Parser p(src);
    return p.finalize(p.parse());
}

PolynomialMap parse_map(const std::string& text, const AlgebraPtr& alg, int nvars) {
    return parse_map(MapSource{text, alg, nvars});
}

Element parse_element(const std::string& text, const AlgebraPtr& alg) {
    MapSource src{text, alg, 1};
    Parser p(src);
    return p.finalize_element(p.parse());
}

// ---- printing ---------------------------------------------------------------

std::string print_element(const Algebra& alg, const Element& e) {
    if (is_zero(e)) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < alg.dim; ++k) {
        const Scalar& c = e[k];
        if (c.is_zero()) continue;
        Scalar v = c;
        bool neg = v.is_real() && v.re < 0;
        if (first) {
            if (neg) { out << "-"; v = -v; }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) v = -v;
        }
        first = false;
        const std::string& label = alg.basis_labels[k];
        if (!v.is_real()) {
            out << "(" << v.to_string() << ")*" << label;
            continue;
        }
        bool numeric_label = std::isdigit(static_cast<unsigned char>(label[0]));
        if (numeric_label) {
            // e.g. label "1": print as the scalar times the unit
            out << rat_to_string(v.re);
            if (label != "1") out << "*" << label;
        } else if (v == Scalar(1)) {
            out << label;
        } else {
            out << rat_to_string(v.re) << "*" << label;
        }
    }
    return out.str();
}

namespace {

std::string print_word(const Algebra& alg, const Word& w) {
    switch (w.kind) {
        case Word::Kind::Const: return "(" + print_element(alg, w.value) + ")";
        case Word::Kind::Var: return "x" + std::to_string(w.var + 1);
        case Word::Kind::Prod:
            return "(" + print_word(alg, *w.left) + "*" + print_word(alg, *w.right) + ")";
    }
    return "?";
}

} // namespace

std::string print_map(const PolynomialMap& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms) {
        Scalar c = t.coeff;
        bool neg = c.is_real() && c.re < 0;
        if (first) {
            if (neg) { out << "-"; c = -c; }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) c = -c;
        }
        first = false;
        if (t.word->kind == Word::Kind::Const && c == Scalar(1)) {
            out << "(" << print_element(*p.alg, t.word->value) << ")";
            continue;
        }
        if (c != Scalar(1)) {
            if (c.is_real()) out << rat_to_string(c.re) << "*";
            else out << "(" << c.to_string() << ")*";
        }
        out << print_word(*p.alg, *t.word);
    }
    return out.str();
}

} // namespace algpoly
