#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coulomb/weyl.hpp"

namespace coulomb {

enum class HMode { Symbolic, One };

/// Finite sum of terms f * g with f a LocRat coefficient and g an extended
/// affine Weyl group element, in normal form (group parts on the right).
/// Holds a reference to its GaugeData, which must outlive the element.
class SmashElement {
  public:
    SmashElement() = default;
    explicit SmashElement(const GaugeData& g) : data_(&g) {}

    static SmashElement zero(const GaugeData& g) { return SmashElement(g); }
    static SmashElement unit(const GaugeData& g);
    static SmashElement coeff(const GaugeData& g, LocRat f);
    static SmashElement poly(const GaugeData& g, const MultiPoly& f);
    static SmashElement group(const GaugeData& g, ExtAffineWeyl w);
    static SmashElement term(const GaugeData& g, LocRat f, ExtAffineWeyl w);
    /// u[i,r]^power: pure shift element.
    static SmashElement shift_u(const GaugeData& g, int i, int r, int power = 1);
    static SmashElement reflection(const GaugeData& g, int i, int a);

    const GaugeData& data() const { return *data_; }
    const std::map<ExtAffineWeyl, LocRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SmashElement operator+(const SmashElement& o) const;
    SmashElement operator-(const SmashElement& o) const;
    SmashElement operator*(const SmashElement& o) const;
    SmashElement operator-() const;
    SmashElement& operator+=(const SmashElement& o) { return *this = *this + o; }
    SmashElement& operator-=(const SmashElement& o) { return *this = *this - o; }
    SmashElement& operator*=(const SmashElement& o) { return *this = *this * o; }
    SmashElement& mul_scalar(const Scalar& c);
    bool operator==(const SmashElement& o) const { return terms_ == o.terms_; }

    LocRat act_on_function(const LocRat& f) const;

    /// Per-vertex shift-lattice weight, or nullopt when terms disagree.
    std::optional<std::vector<int>> weight() const;
    /// Total degree under deg w = z = h = 1, or nullopt when inhomogeneous.
    std::optional<int> degree() const;

    /// Coefficient of the identity-group term when the element is purely
    /// rational (single trivial term or zero); nullopt otherwise.
    std::optional<LocRat> as_coeff() const;
    std::optional<SmashElement> div_h() const;

    void add_term(const ExtAffineWeyl& g, const LocRat& f);

    std::string to_string(HMode mode = HMode::Symbolic) const;
    static SmashElement parse(const GaugeData& g, const std::string& text);

  private:
    void check_same(const SmashElement& o) const;

    const GaugeData* data_ = nullptr;
    std::map<ExtAffineWeyl, LocRat> terms_;
};

SmashElement operator*(const Scalar& c, const SmashElement& a);
SmashElement commutator(const SmashElement& a, const SmashElement& b);

}  // namespace coulomb
