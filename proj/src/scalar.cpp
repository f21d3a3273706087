#include "algpoly/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace algpoly {

Rat parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(t, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot lift non-finite double to a rational");
    mpq_class q(x);
    q.canonicalize();
    return q;
}

std::string Scalar::to_string() const {
    if (im == 0) return rat_to_string(re);
    if (re == 0) return rat_to_string(im) + "*i";
    std::string s = rat_to_string(re);
    if (im > 0) s += "+";
    s += rat_to_string(im) + "*i";
    return s;
}

Scalar parse_scalar(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty scalar literal");
    // split at the last top-level +/- that is not a leading sign
    auto strip_i = [](const std::string& u) -> std::optional<std::string> {
        if (u == "i") return std::string("1");
        if (u == "-i") return std::string("-1");
        if (u.size() > 2 && u.substr(u.size() - 2) == "*i") return u.substr(0, u.size() - 2);
        if (!u.empty() && u.back() == 'i') return u.substr(0, u.size() - 1);
        return std::nullopt;
    };
    for (size_t pos = t.size(); pos-- > 1;) {
        if ((t[pos] == '+' || t[pos] == '-') && t[pos - 1] != '/' && t[pos - 1] != '+' &&
            t[pos - 1] != '-') {
            std::string a = t.substr(0, pos);
            std::string b = (t[pos] == '-' ? "-" : "") + t.substr(pos + 1);
            if (auto bi = strip_i(b)) return {parse_rational(a), parse_rational(*bi)};
            break;
        }
    }
    if (auto i = strip_i(t)) return {Rat(0), parse_rational(*i)};
    return {parse_rational(t), Rat(0)};
}

} // namespace algpoly
