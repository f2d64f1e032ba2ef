#include "coulomb/smash.hpp"

#include <cctype>
#include <stdexcept>

namespace coulomb {

SmashElement SmashElement::unit(const GaugeData& g) {
    return coeff(g, LocRat::constant(1));
}

SmashElement SmashElement::coeff(const GaugeData& g, LocRat f) {
    return term(g, std::move(f), ExtAffineWeyl::identity(g));
}

SmashElement SmashElement::poly(const GaugeData& g, const MultiPoly& f) {
    return coeff(g, LocRat(f));
}

SmashElement SmashElement::group(const GaugeData& g, ExtAffineWeyl w) {
    return term(g, LocRat::constant(1), std::move(w));
}

SmashElement SmashElement::term(const GaugeData& g, LocRat f, ExtAffineWeyl w) {
    SmashElement a(g);
    if (!f.is_zero()) a.terms_.emplace(std::move(w), std::move(f));
    return a;
}

SmashElement SmashElement::shift_u(const GaugeData& g, int i, int r, int power) {
    Coweight lam = Coweight::zero(g);
    lam.at(i, r) = power;
    return group(g, ExtAffineWeyl::translation(lam));
}

SmashElement SmashElement::reflection(const GaugeData& g, int i, int a) {
    return group(g, ExtAffineWeyl::reflection(g, i, a));
}

void SmashElement::check_same(const SmashElement& o) const {
    if (data_ == o.data_) return;
    if (!data_ || !o.data_ || !(*data_ == *o.data_))
        throw std::invalid_argument("mismatched gauge data");
}

void SmashElement::add_term(const ExtAffineWeyl& g, const LocRat& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

SmashElement SmashElement::operator+(const SmashElement& o) const {
    check_same(o);
    SmashElement out = *this;
    if (!out.data_) out.data_ = o.data_;
    for (const auto& [g, f] : o.terms_) out.add_term(g, f);
    return out;
}

SmashElement SmashElement::operator-(const SmashElement& o) const { return *this + (-o); }

SmashElement SmashElement::operator-() const {
    SmashElement out = *this;
    for (auto& [g, f] : out.terms_) f = -f;
    return out;
}

SmashElement SmashElement::operator*(const SmashElement& o) const {
    check_same(o);
    SmashElement out = data_ ? SmashElement(*data_) : SmashElement(*o.data_);
    for (const auto& [g1, f1] : terms_)
        for (const auto& [g2, f2] : o.terms_) out.add_term(g1 * g2, f1 * g1.act(f2));
    return out;
}

SmashElement& SmashElement::mul_scalar(const Scalar& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, f] : terms_) f.mul_scalar(c);
    return *this;
}

LocRat SmashElement::act_on_function(const LocRat& f) const {
    LocRat out;
    for (const auto& [g, c] : terms_) out += c * g.act(f);
    return out;
}

std::optional<std::vector<int>> SmashElement::weight() const {
    std::optional<std::vector<int>> wt;
    if (terms_.empty() && data_) return std::vector<int>(data_->nvertices(), 0);
    for (const auto& [g, f] : terms_) {
        (void)f;
        std::vector<int> w;
        for (const auto& row : g.shift) {
            int s = 0;
            for (int x : row) s += x;
            w.push_back(s);
        }
        if (!wt)
            wt = std::move(w);
        else if (*wt != w)
            return std::nullopt;
    }
    return wt;
}

std::optional<int> SmashElement::degree() const {
    std::optional<int> deg;
    if (terms_.empty()) return 0;
    for (const auto& [g, f] : terms_) {
        (void)g;
        if (!f.is_homogeneous()) return std::nullopt;
        if (!deg)
            deg = f.degree();
        else if (*deg != f.degree())
            return std::nullopt;
    }
    return deg;
}

std::optional<LocRat> SmashElement::as_coeff() const {
    if (terms_.empty()) return LocRat();
    if (terms_.size() != 1) return std::nullopt;
    const auto& [g, f] = *terms_.begin();
    if (!g.is_identity()) return std::nullopt;
    return f;
}

std::optional<SmashElement> SmashElement::div_h() const {
    SmashElement out = data_ ? SmashElement(*data_) : SmashElement();
    for (const auto& [g, f] : terms_) {
        auto q = f.div_h();
        if (!q) return std::nullopt;
        out.terms_.emplace(g, std::move(*q));
    }
    return out;
}

namespace {

std::string poly_string(const MultiPoly& p, HMode mode) {
    if (mode == HMode::Symbolic) return p.to_string();
    std::map<VarId, MultiPoly> h_one{{VarId::loop(), MultiPoly::constant(1)}};
    return p.substitute(h_one).to_string();
}

}  // namespace

std::string SmashElement::to_string(HMode mode) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [g, f] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + poly_string(f.num(), mode) + ")";
        if (!f.den().empty()) {
            s += " / (";
            bool fst = true;
            for (const auto& [form, mult] : f.den()) {
                if (!fst) s += " * ";
                fst = false;
                s += "(" + poly_string(form.to_poly(), mode) + ")";
                if (mult != 1) s += "^" + std::to_string(mult);
            }
            s += ")";
        }
        s += " * s[" + g.perm_string() + "] * u[" + g.shift_string() + "]";
    }
    return s;
}

namespace {

class SmashParser {
  public:
    SmashParser(const GaugeData& g, const std::string& text) : g_(g), s_(text) {}

    SmashElement parse() {
        skip();
        if (peek() == '0') {
            ++pos_;
            skip();
            if (pos_ != s_.size()) fail("trailing input after 0");
            return SmashElement::zero(g_);
        }
        SmashElement out(g_);
        while (true) {
            parse_term(out);
            skip();
            if (pos_ == s_.size()) break;
            expect('+');
        }
        return out;
    }

  private:
    void parse_term(SmashElement& out) {
        skip();
        MultiPoly num = poly_parse(group_chunk());
        std::map<LinForm, int> den;
        skip();
        if (peek() == '/') {
            ++pos_;
            skip();
            std::string inside = group_chunk();
            parse_den(inside, den);
            skip();
        }
        expect('*');
        skip();
        expect('s');
        ExtAffineWeyl g = ExtAffineWeyl::identity(g_);
        parse_perm(bracket_chunk(), g);
        skip();
        expect('*');
        skip();
        expect('u');
        parse_shift(bracket_chunk(), g);
        out.add_term(g, LocRat(std::move(num), std::move(den)));
    }

    // Content of a parenthesized group, cursor past the closing paren.
    std::string group_chunk() {
        expect('(');
        std::size_t start = pos_;
        int depth = 1;
        while (pos_ < s_.size() && depth > 0) {
            if (s_[pos_] == '(') ++depth;
            if (s_[pos_] == ')') --depth;
            ++pos_;
        }
        if (depth != 0) fail("unbalanced parentheses");
        return s_.substr(start, pos_ - 1 - start);
    }

    std::string bracket_chunk() {
        expect('[');
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
        if (pos_ == s_.size()) fail("unterminated bracket");
        return s_.substr(start, pos_++ - start);
    }

    void parse_den(const std::string& inside, std::map<LinForm, int>& den) {
        std::size_t p = 0;
        while (p < inside.size()) {
            while (p < inside.size() && (std::isspace(static_cast<unsigned char>(inside[p])) ||
                                         inside[p] == '*'))
                ++p;
            if (p >= inside.size()) break;
            if (inside[p] != '(') fail("expected denominator factor");
            std::size_t start = ++p;
            int depth = 1;
            while (p < inside.size() && depth > 0) {
                if (inside[p] == '(') ++depth;
                if (inside[p] == ')') --depth;
                ++p;
            }
            if (depth != 0) fail("unbalanced denominator factor");
            MultiPoly form = poly_parse(inside.substr(start, p - 1 - start));
            int mult = 1;
            if (p < inside.size() && inside[p] == '^') {
                ++p;
                std::size_t q = p;
                while (q < inside.size() && std::isdigit(static_cast<unsigned char>(inside[q])))
                    ++q;
                if (q == p) fail("expected exponent");
                mult = std::stoi(inside.substr(p, q - p));
                p = q;
            }
            den[form_of(form)] += mult;
        }
    }

    LinForm form_of(const MultiPoly& p) {
        std::optional<VarId> x, y;
        Scalar c(0);
        for (const auto& [mono, coef] : p.terms()) {
            if (mono.size() == 1 && mono[0].second == 1 &&
                mono[0].first.kind == VarId::Kind::Gauge) {
                if (coef == 1 && !x)
                    x = mono[0].first;
                else if (coef == -1 && !y)
                    y = mono[0].first;
                else
                    fail("not a linear form");
            } else if (mono.size() == 1 && mono[0].second == 1 &&
                       mono[0].first.kind == VarId::Kind::Loop) {
                c = -coef;
            } else {
                fail("not a linear form");
            }
        }
        if (!x || !y) fail("not a linear form");
        int sign = 1;
        LinForm form = LinForm::canonical(*x, *y, c, &sign);
        if (sign != 1) fail("non-canonical form");
        return form;
    }

    void parse_perm(const std::string& text, ExtAffineWeyl& g) {
        auto rows = split_rows(text);
        if (static_cast<int>(rows.size()) != g_.nvertices()) fail("perm vertex count");
        for (int i = 0; i < g_.nvertices(); ++i) {
            if (static_cast<int>(rows[i].size()) != g_.v[i]) fail("perm size");
            Perm p(g_.v[i]);
            std::vector<bool> seen(g_.v[i], false);
            for (int r = 0; r < g_.v[i]; ++r) {
                int img = rows[i][r] - 1;
                if (img < 0 || img >= g_.v[i] || seen[img]) fail("bad permutation");
                seen[img] = true;
                p[r] = img;
            }
            g.perm[i] = std::move(p);
        }
    }

    void parse_shift(const std::string& text, ExtAffineWeyl& g) {
        auto rows = split_rows(text);
        if (static_cast<int>(rows.size()) != g_.nvertices()) fail("shift vertex count");
        for (int i = 0; i < g_.nvertices(); ++i) {
            if (static_cast<int>(rows[i].size()) != g_.v[i]) fail("shift size");
            g.shift[i] = rows[i];
        }
    }

    std::vector<std::vector<int>> split_rows(const std::string& text) {
        std::vector<std::vector<int>> rows(1);
        std::size_t p = 0;
        while (p <= text.size()) {
            if (p == text.size() || text[p] == '|') {
                if (p == text.size()) break;
                rows.emplace_back();
                ++p;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(text[p]))) {
                ++p;
                continue;
            }
            std::size_t q = p;
            if (text[q] == '-') ++q;
            while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
            if (q == p || (text[p] == '-' && q == p + 1)) fail("expected integer");
            rows.back().push_back(std::stoi(text.substr(p, q - p)));
            p = q;
        }
        return rows;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("smash parse error at offset " + std::to_string(pos_) + ": " +
                                    msg);
    }

    const GaugeData& g_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

SmashElement SmashElement::parse(const GaugeData& g, const std::string& text) {
    return SmashParser(g, text).parse();
}

SmashElement operator*(const Scalar& c, const SmashElement& a) {
    SmashElement out = a;
    out.mul_scalar(c);
    return out;
}

SmashElement commutator(const SmashElement& a, const SmashElement& b) {
    return a * b - b * a;
}

}  // namespace coulomb
