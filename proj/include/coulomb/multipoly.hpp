#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coulomb/rational.hpp"
#include "coulomb/varid.hpp"

namespace coulomb {

/// Sorted sparse exponent vector; entries have positive exponents.
using Monomial = std::vector<std::pair<VarId, int>>;

/// Lexicographic monomial order over the VarId total order (missing = 0).
/// A valid term order: compatible with multiplication, so exact division
/// by leading-term elimination terminates.
struct MonomialLess {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

Monomial monomial_mul(const Monomial& x, const Monomial& y);
int monomial_degree(const Monomial& m);

/// Exact multivariate polynomial with rational coefficients.
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(const Scalar& c);
    static MultiPoly variable(VarId v, int exp = 1);
    static MultiPoly constant(long num, long den = 1) { return MultiPoly(scalar_of(num, den)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the whole value when is_constant()).
    Scalar constant_term() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& mul_scalar(const Scalar& c);
    MultiPoly pow(int e) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    /// Simultaneous substitution of variables by polynomials.
    MultiPoly substitute(const std::map<VarId, MultiPoly>& images) const;

    /// Exact division; nullopt when the divisor does not divide exactly.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    /// Total degree with every variable of weight 1; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool contains_var(VarId v) const;

    const std::map<Monomial, Scalar, MonomialLess>& terms() const { return terms_; }
    void add_term(const Monomial& m, const Scalar& c);

    std::string to_string() const;

  private:
    std::map<Monomial, Scalar, MonomialLess> terms_;
};

MultiPoly operator*(const Scalar& c, const MultiPoly& p);

/// Parses the expression language used throughout serialized output:
/// rationals, w[i,r], z[k], h, '+', '-', '*', '^', parentheses.
MultiPoly poly_parse(const std::string& text);

/// All monomials over vars of total degree exactly d, deterministic order.
std::vector<Monomial> monomials_of_degree(const std::vector<VarId>& vars, int d);
std::vector<Monomial> monomials_up_to(const std::vector<VarId>& vars, int d);
/// e_p(vars); e_0 = 1.
MultiPoly elementary_symmetric(const std::vector<VarId>& vars, int p);

}  // namespace coulomb
