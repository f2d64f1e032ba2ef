#pragma once

#include <map>
#include <optional>
#include <string>

#include "coulomb/multipoly.hpp"

namespace coulomb {

/// Admissible denominator factor w[i,r] - w[i,s] - c*h between two gauge
/// variables of the same vertex. Canonical representative has x < y; flipping
/// the variables negates the form and the h-coefficient.
struct LinForm {
    VarId x, y;
    Scalar c;

    /// Canonicalizes a - b - c*h; multiplies *sign by -1 when flipped.
    /// Throws when a, b are not distinct gauge variables of one vertex.
    static LinForm canonical(VarId a, VarId b, const Scalar& c, int* sign);

    MultiPoly to_poly() const;
    std::string to_string() const;

    bool operator==(const LinForm& o) const { return x == o.x && y == o.y && c == o.c; }
    bool operator<(const LinForm& o) const;
};

/// Exact rational function: polynomial numerator over a factored multiset of
/// admissible linear forms. Always stored reduced (no denominator factor
/// divides the numerator), so equality is field-wise.
class LocRat {
  public:
    LocRat() = default;
    explicit LocRat(MultiPoly num) : num_(std::move(num)) {}
    LocRat(MultiPoly num, std::map<LinForm, int> den);
    static LocRat constant(long num, long den = 1) { return LocRat(MultiPoly::constant(num, den)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.empty(); }
    const MultiPoly& num() const { return num_; }
    const std::map<LinForm, int>& den() const { return den_; }

    LocRat operator+(const LocRat& o) const;
    LocRat operator-(const LocRat& o) const;
    LocRat operator*(const LocRat& o) const;
    LocRat operator-() const;
    LocRat& operator+=(const LocRat& o) { return *this = *this + o; }
    LocRat& operator-=(const LocRat& o) { return *this = *this - o; }
    LocRat& operator*=(const LocRat& o) { return *this = *this * o; }
    LocRat& mul_scalar(const Scalar& c);
    bool operator==(const LocRat& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Divides by the form (a - b - c*h); the absorbed sign lands in the numerator.
    LocRat div_by_form(VarId a, VarId b, const Scalar& c) const;

    /// Expanded denominator polynomial (for evaluation; storage stays factored).
    MultiPoly den_poly() const;

    /// h -> 0. Well-defined: every denominator form stays nonzero at h = 0.
    LocRat at_h_zero() const;
    /// (1/h)*this when h divides the numerator.
    std::optional<LocRat> div_h() const;

    /// Total degree (numerator minus denominator); INT_MIN sentinel unused, zero gives -1.
    int degree() const;
    bool is_homogeneous() const { return num_.is_homogeneous(); }

    std::string to_string() const;

  private:
    void reduce();

    MultiPoly num_;
    std::map<LinForm, int> den_;
};

LocRat operator*(const Scalar& c, const LocRat& f);

}  // namespace coulomb
