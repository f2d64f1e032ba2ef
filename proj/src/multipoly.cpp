#include "coulomb/multipoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace coulomb {

std::string VarId::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Gauge: os << "w[" << a + 1 << "," << b + 1 << "]"; break;
        case Kind::Flavour: os << "z[" << a + 1 << "]"; break;
        case Kind::Loop: os << "h"; break;
    }
    return os.str();
}

bool MonomialLess::operator()(const Monomial& x, const Monomial& y) const {
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first == y[j].first) {
            if (x[i].second != y[j].second) return x[i].second < y[j].second;
            ++i, ++j;
        } else if (x[i].first < y[j].first) {
            return false;  // x has a positive exponent on an earlier variable
        } else {
            return true;
        }
    }
    if (i < x.size()) return false;
    if (j < y.size()) return true;
    return false;
}

Monomial monomial_mul(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first == y[j].first) {
            out.emplace_back(x[i].first, x[i].second + y[j].second);
            ++i, ++j;
        } else if (x[i].first < y[j].first) {
            out.push_back(x[i++]);
        } else {
            out.push_back(y[j++]);
        }
    }
    while (i < x.size()) out.push_back(x[i++]);
    while (j < y.size()) out.push_back(y[j++]);
    return out;
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

MultiPoly::MultiPoly(const Scalar& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(VarId v, int exp) {
    MultiPoly p;
    if (exp < 0) throw std::invalid_argument("variable: negative exponent");
    if (exp == 0) return MultiPoly(Scalar(1));
    p.terms_.emplace(Monomial{{v, exp}}, Scalar(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(monomial_mul(m1, m2), c1 * c2);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::mul_scalar(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    MultiPoly r = MultiPoly(Scalar(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& p) {
    MultiPoly r = p;
    r.mul_scalar(c);
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& images) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        MultiPoly term(c);
        for (const auto& [v, e] : m) {
            auto it = images.find(v);
            if (it == images.end())
                term = term * MultiPoly::variable(v, e);
            else
                term = term * it->second.pow(e);
        }
        out += term;
    }
    return out;
}

namespace {

std::optional<Monomial> monomial_divide(const Monomial& a, const Monomial& b) {
    Monomial q;
    std::size_t i = 0, j = 0;
    while (i < a.size()) {
        if (j < b.size() && a[i].first == b[j].first) {
            if (a[i].second < b[j].second) return std::nullopt;
            if (a[i].second > b[j].second) q.emplace_back(a[i].first, a[i].second - b[j].second);
            ++i, ++j;
        } else if (j < b.size() && b[j].first < a[i].first) {
            return std::nullopt;
        } else {
            q.push_back(a[i]);
            ++i;
        }
    }
    if (j < b.size()) return std::nullopt;
    return q;
}

}  // namespace

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    MultiPoly rem = *this;
    MultiPoly quot;
    const auto& dlead = *divisor.terms_.rbegin();  // largest monomial in the term order
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        auto q = monomial_divide(rlead.first, dlead.first);
        if (!q) return std::nullopt;
        MultiPoly qterm;
        qterm.add_term(*q, rlead.second / dlead.second);
        quot += qterm;
        rem -= qterm * divisor;
    }
    return quot;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = -2;
    for (const auto& [m, c] : terms_) {
        int md = monomial_degree(m);
        if (d == -2) d = md;
        if (md != d) return false;
    }
    return true;
}

bool MultiPoly::contains_var(VarId v) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [mv, e] : m)
            if (mv == v) return true;
    return false;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print from the largest monomial down so leading terms come first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Scalar a = c > 0 ? c : Scalar(-c);
        if (first)
            os << (c > 0 ? "" : "-");
        else
            os << (c > 0 ? " + " : " - ");
        first = false;
        bool unit_coeff = (a == 1) && !m.empty();
        if (!unit_coeff) os << scalar_to_string(a);
        bool lead = unit_coeff;
        for (const auto& [v, e] : m) {
            if (!lead) os << "*";
            lead = false;
            os << v.to_string();
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

/// Recursive-descent parser for the polynomial expression language.
class PolyParser {
  public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

  private:
    MultiPoly expr() {
        MultiPoly p = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                p += term();
            } else if (peek() == '-') {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                p = p * factor();
            } else if (peek() == '/') {
                ++pos_;
                MultiPoly d = factor();
                if (!d.is_constant() || d.constant_term() == 0) fail("division by non-constant");
                p.mul_scalar(Scalar(1) / d.constant_term());
            } else {
                return p;
            }
        }
    }

    MultiPoly factor() {
        skip_ws();
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        MultiPoly base;
        if (c == '(') {
            ++pos_;
            base = expr();
            skip_ws();
            expect(')');
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = MultiPoly(number());
        } else if (c == 'w') {
            ++pos_;
            expect('[');
            long i = integer();
            expect(',');
            long r = integer();
            expect(']');
            base = MultiPoly::variable(VarId::gauge(static_cast<int>(i) - 1, static_cast<int>(r) - 1));
        } else if (c == 'z') {
            ++pos_;
            expect('[');
            long k = integer();
            expect(']');
            base = MultiPoly::variable(VarId::flavour(static_cast<int>(k) - 1));
        } else if (c == 'h') {
            ++pos_;
            base = MultiPoly::variable(VarId::loop());
        } else {
            fail("expected factor");
        }
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            long e = integer();
            if (e < 0) fail("negative exponent");
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    Scalar number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected number");
        std::string digits = s_.substr(start, pos_ - start);
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (dstart == pos_) fail("expected denominator");
            digits += "/" + s_.substr(dstart, pos_ - dstart);
        }
        return scalar_parse(digits);
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        long v = std::stol(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("poly parse at offset " + std::to_string(pos_) + ": " + why);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly poly_parse(const std::string& text) { return PolyParser(text).parse(); }

namespace {

void monomials_rec(const std::vector<VarId>& vars, std::size_t pos, int left, bool exact,
                   Monomial& cur, std::vector<Monomial>& out) {
    if (pos == vars.size()) {
        if (!exact || left == 0) out.push_back(cur);
        return;
    }
    for (int e = 0; e <= left; ++e) {
        if (e > 0) {
            if (e == 1)
                cur.emplace_back(vars[pos], 1);
            else
                cur.back().second = e;
        }
        monomials_rec(vars, pos + 1, left - e, exact, cur, out);
    }
    if (left > 0) cur.pop_back();
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const std::vector<VarId>& vars, int d) {
    std::vector<Monomial> out;
    Monomial cur;
    monomials_rec(vars, 0, d, true, cur, out);
    return out;
}

std::vector<Monomial> monomials_up_to(const std::vector<VarId>& vars, int d) {
    std::vector<Monomial> out;
    Monomial cur;
    monomials_rec(vars, 0, d, false, cur, out);
    return out;
}

MultiPoly elementary_symmetric(const std::vector<VarId>& vars, int p) {
    const int n = static_cast<int>(vars.size());
    if (p < 0 || p > n) return MultiPoly();
    // e[k] after processing prefix of vars.
    std::vector<MultiPoly> e(p + 1);
    e[0] = MultiPoly::constant(1);
    for (int m = 0; m < n; ++m) {
        MultiPoly x = MultiPoly::variable(vars[m]);
        for (int k = std::min(p, m + 1); k >= 1; --k) e[k] += e[k - 1] * x;
    }
    return e[p];
}

}  // namespace coulomb
