#include "coulomb/relations.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "coulomb/nilhecke.hpp"

namespace coulomb {

namespace {

struct Parser {
    const GaugeData& g;
    std::vector<std::string> tokens;
    std::size_t at = 0;

    bool done() const { return at == tokens.size(); }
    const std::string& peek() const {
        if (done()) throw std::invalid_argument("unexpected end of expression");
        return tokens[at];
    }
    std::string next() {
        std::string t = peek();
        ++at;
        return t;
    }

    static bool is_rational(const std::string& t) {
        std::size_t start = t[0] == '-' ? 1 : 0;
        if (start == t.size()) return false;
        bool seen_slash = false;
        for (std::size_t k = start; k < t.size(); ++k) {
            if (t[k] == '/' && !seen_slash && k > start && k + 1 < t.size())
                seen_slash = true;
            else if (!std::isdigit(static_cast<unsigned char>(t[k])))
                return false;
        }
        return true;
    }

    // NAME(a,b) or NAME(a); returns indices 1-based.
    static bool indexed(const std::string& t, const std::string& name, int arity, int& a,
                        int& b) {
        if (t.size() < name.size() + 3 || t.compare(0, name.size(), name) != 0) return false;
        if (t[name.size()] != '(' || t.back() != ')') return false;
        std::string inner = t.substr(name.size() + 1, t.size() - name.size() - 2);
        std::istringstream in(inner);
        char comma = 0;
        if (arity == 1) {
            if (!(in >> a)) return false;
        } else {
            if (!(in >> a >> comma >> b) || comma != ',') return false;
        }
        in >> std::ws;
        return in.eof();
    }

    SmashElement atom() {
        std::string t = next();
        int a = 0, b = 0;
        if (t == "h") return SmashElement::poly(g, MultiPoly::variable(VarId::loop()));
        if (t == "e") return symmetrizer(g);
        if (is_rational(t)) {
            std::size_t slash = t.find('/');
            long num = std::stol(slash == std::string::npos ? t : t.substr(0, slash));
            long den = slash == std::string::npos ? 1 : std::stol(t.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
            return SmashElement::coeff(g, LocRat::constant(num, den));
        }
        if (indexed(t, "A", 2, a, b)) return image(g, {GenTag::A, a - 1, b});
        if (indexed(t, "E", 2, a, b)) return image(g, {GenTag::E, a - 1, b});
        if (indexed(t, "F", 2, a, b)) return image(g, {GenTag::F, a - 1, b});
        if (indexed(t, "w", 2, a, b)) {
            if (a < 1 || a > g.nvertices() || b < 1 || b > g.v[a - 1])
                throw std::invalid_argument("gauge index out of range in '" + t + "'");
            return SmashElement::poly(g, MultiPoly::variable(VarId::gauge(a - 1, b - 1)));
        }
        if (indexed(t, "u", 2, a, b)) {
            if (a < 1 || a > g.nvertices() || b < 1 || b > g.v[a - 1])
                throw std::invalid_argument("gauge index out of range in '" + t + "'");
            return SmashElement::shift_u(g, a - 1, b - 1);
        }
        if (indexed(t, "z", 1, a, b)) {
            if (a < 1 || a > g.nflavours())
                throw std::invalid_argument("flavour index out of range in '" + t + "'");
            return SmashElement::poly(g, g.flavour_poly(a - 1));
        }
        throw std::invalid_argument("unexpected token '" + t + "'");
    }

    SmashElement factor() {
        const std::string& t = peek();
        if (t == "commutator" || t == "poisson" || t == "product") {
            std::string op = next();
            SmashElement x = factor();
            SmashElement y = factor();
            if (op == "commutator") return commutator(x, y);
            if (op == "poisson") return poisson_bracket(x, y);
            return x * y;
        }
        if (t == "(") {
            next();
            SmashElement inner = expr();
            if (done() || next() != ")") throw std::invalid_argument("missing ')'");
            return inner;
        }
        return atom();
    }

    SmashElement term() {
        SmashElement out = factor();
        while (!done() && peek() == "*") {
            next();
            out *= factor();
        }
        return out;
    }

    SmashElement expr() {
        bool negate = !done() && peek() == "-";
        if (negate) next();
        SmashElement out = term();
        if (negate) out = -out;
        while (!done() && (peek() == "+" || peek() == "-")) {
            if (next() == "+")
                out += term();
            else
                out -= term();
        }
        return out;
    }
};

std::vector<std::string> tokenize(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

}  // namespace

SmashElement parse_expression(const GaugeData& g, const std::string& text) {
    Parser p{g, tokenize(text)};
    if (p.done()) throw std::invalid_argument("empty expression");
    SmashElement out = p.expr();
    if (!p.done()) throw std::invalid_argument("trailing token '" + p.peek() + "'");
    return out;
}

RelationReport check_relations(const GaugeData& g, const std::string& text, HMode mode) {
    RelationReport rep;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;

        std::size_t split = tokens.size();
        for (std::size_t k = 0; k < tokens.size(); ++k)
            if (tokens[k] == "equals") {
                if (split != tokens.size())
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": repeated 'equals'");
                split = k;
            }
        if (split == tokens.size() || split == 0 || split + 1 == tokens.size())
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": want EXPR equals EXPR");

        std::string relation;
        for (const std::string& t : tokens) relation += (relation.empty() ? "" : " ") + t;
        SmashElement lhs, rhs;
        try {
            Parser pl{g, {tokens.begin(), tokens.begin() + split}};
            lhs = pl.expr();
            if (!pl.done()) throw std::invalid_argument("trailing token '" + pl.peek() + "'");
            Parser pr{g, {tokens.begin() + split + 1, tokens.end()}};
            rhs = pr.expr();
            if (!pr.done()) throw std::invalid_argument("trailing token '" + pr.peek() + "'");
        } catch (const std::invalid_argument& err) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + err.what());
        }
        if (lhs == rhs) {
            rep.lines.push_back("PASS " + relation);
        } else {
            rep.pass = false;
            rep.lines.push_back("FAIL " + relation + " lhs=" + lhs.to_string(mode) +
                                " rhs=" + rhs.to_string(mode));
        }
    }
    return rep;
}

}  // namespace coulomb
