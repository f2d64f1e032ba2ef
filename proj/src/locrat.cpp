#include "coulomb/locrat.hpp"

#include <sstream>
#include <stdexcept>

namespace coulomb {

LinForm LinForm::canonical(VarId a, VarId b, const Scalar& c, int* sign) {
    if (a.kind != VarId::Kind::Gauge || b.kind != VarId::Kind::Gauge || a.a != b.a || a == b)
        throw std::invalid_argument("linform: needs two distinct gauge variables of one vertex");
    if (a < b) return LinForm{a, b, c};
    if (sign) *sign = -*sign;
    return LinForm{b, a, -c};
}

MultiPoly LinForm::to_poly() const {
    MultiPoly p = MultiPoly::variable(x) - MultiPoly::variable(y);
    if (c != 0) p -= Scalar(c) * MultiPoly::variable(VarId::loop());
    return p;
}

std::string LinForm::to_string() const {
    std::ostringstream os;
    os << x.to_string() << " - " << y.to_string();
    if (c != 0) {
        Scalar a = c > 0 ? c : Scalar(-c);
        os << (c > 0 ? " - " : " + ");
        if (a != 1) os << scalar_to_string(a) << "*";
        os << "h";
    }
    return os.str();
}

bool LinForm::operator<(const LinForm& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return cmp(c, o.c) < 0;
}

LocRat::LocRat(MultiPoly num, std::map<LinForm, int> den) : num_(std::move(num)), den_(std::move(den)) {
    for (const auto& [f, m] : den_)
        if (m <= 0) throw std::invalid_argument("locrat: nonpositive denominator multiplicity");
    reduce();
}

void LocRat::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        MultiPoly f = it->first.to_poly();
        while (it->second > 0) {
            auto q = num_.divide_exact(f);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

LocRat LocRat::operator+(const LocRat& o) const {
    std::map<LinForm, int> den;
    for (const auto& [f, m] : den_) den[f] = m;
    for (const auto& [f, m] : o.den_) {
        auto it = den.find(f);
        if (it == den.end())
            den[f] = m;
        else
            it->second = std::max(it->second, m);
    }
    MultiPoly n1 = num_, n2 = o.num_;
    for (const auto& [f, m] : den) {
        auto it1 = den_.find(f);
        auto it2 = o.den_.find(f);
        int m1 = it1 == den_.end() ? 0 : it1->second;
        int m2 = it2 == o.den_.end() ? 0 : it2->second;
        MultiPoly fp = f.to_poly();
        n1 *= fp.pow(m - m1);
        n2 *= fp.pow(m - m2);
    }
    return LocRat(n1 + n2, std::move(den));
}

LocRat LocRat::operator-(const LocRat& o) const { return *this + (-o); }

LocRat LocRat::operator*(const LocRat& o) const {
    std::map<LinForm, int> den = den_;
    for (const auto& [f, m] : o.den_) den[f] += m;
    return LocRat(num_ * o.num_, std::move(den));
}

LocRat LocRat::operator-() const {
    LocRat r = *this;
    r.num_ = -r.num_;
    return r;
}

LocRat& LocRat::mul_scalar(const Scalar& c) {
    if (c == 0) return *this = LocRat();
    num_.mul_scalar(c);
    return *this;
}

LocRat operator*(const Scalar& c, const LocRat& f) {
    LocRat r = f;
    r.mul_scalar(c);
    return r;
}

LocRat LocRat::div_by_form(VarId a, VarId b, const Scalar& c) const {
    if (is_zero()) return LocRat();
    int sign = 1;
    LinForm f = LinForm::canonical(a, b, c, &sign);
    std::map<LinForm, int> den = den_;
    den[f] += 1;
    MultiPoly n = num_;
    if (sign < 0) n = -n;
    return LocRat(std::move(n), std::move(den));
}

MultiPoly LocRat::den_poly() const {
    MultiPoly p = MultiPoly::constant(1);
    for (const auto& [f, m] : den_) p *= f.to_poly().pow(m);
    return p;
}

LocRat LocRat::at_h_zero() const {
    std::map<VarId, MultiPoly> images;
    images[VarId::loop()] = MultiPoly();
    MultiPoly n = num_.substitute(images);
    std::map<LinForm, int> den;
    for (const auto& [f, m] : den_) den[LinForm{f.x, f.y, Scalar(0)}] += m;
    return LocRat(std::move(n), std::move(den));
}

std::optional<LocRat> LocRat::div_h() const {
    if (is_zero()) return LocRat();
    auto q = num_.divide_exact(MultiPoly::variable(VarId::loop()));
    if (!q) return std::nullopt;
    LocRat r = *this;
    r.num_ = std::move(*q);
    return r;
}

int LocRat::degree() const {
    int d = num_.degree();
    for (const auto& [f, m] : den_) d -= m;
    return d;
}

std::string LocRat::to_string() const {
    std::ostringstream os;
    os << "(" << num_.to_string() << ")";
    if (!den_.empty()) {
        os << " / (";
        bool first = true;
        for (const auto& [f, m] : den_) {
            if (!first) os << " * ";
            first = false;
            os << "(" << f.to_string() << ")";
            if (m != 1) os << "^" << m;
        }
        os << ")";
    }
    return os.str();
}

}  // namespace coulomb
