#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "coulomb/smash.hpp"

namespace coulomb {

/// Fundamental class r_lambda realized as Phi(lambda) * u^lambda.
struct AbelianClass {
    Coweight lam;
    SmashElement realization;
};

/// r_{+eps_{i,r}} (sign > 0) or r_{-eps_{i,r}} (sign < 0).
AbelianClass r_unit(const GaugeData& g, int sign, int i, int r);

/// Correction factor of the product formula r_{sign*eps_{i,r}} * r_lambda =
/// factor * r_{lambda + sign*eps_{i,r}}; lambda is the coweight before the
/// step and must satisfy sign*lambda_{i,r} >= 0.
MultiPoly step_factor(const GaugeData& g, int sign, int i, int r, const Coweight& lam);

/// r_lambda by unit steps in canonical order (positive steps first).
AbelianClass r_general(const GaugeData& g, const Coweight& lam);

/// r_lambda along an explicit step sequence of (sign, i, r); throws when a
/// step violates the sign-purity precondition.
AbelianClass r_general_ordered(const GaugeData& g,
                               const std::vector<std::tuple<int, int, int>>& steps);

struct ProductFormulaReport {
    bool pass = false;
    std::string lhs, rhs;
};

ProductFormulaReport verify_product_formula(const GaugeData& g, int sign, int i, int r,
                                            const Coweight& lam);

/// Decomposition certificate for r_lambda over unit steps at h = 1.
struct RTree {
    enum class Kind { One, Unit, Scale, Prod, Sum };
    Kind kind = Kind::One;
    int sign = 0, i = 0, r = 0;  // Unit leaves
    MultiPoly factor;            // Scale nodes, h already at 1
    std::vector<RTree> children;

    std::string to_string() const;
};

/// Expresses r_lambda through unit steps by the Bezout induction on |lambda|;
/// linear solves run at increasing degree up to degree_bound.
RTree decompose_r(const GaugeData& g, const Coweight& lam, int degree_bound = 6);

/// Pure-shift smash element at h = 1: the shift u^lambda moves w[i,r] by the
/// integer lambda_{i,r}.
struct HOneElement {
    std::map<Coweight, MultiPoly> terms;

    HOneElement operator+(const HOneElement& o) const;
    HOneElement operator*(const HOneElement& o) const;
    HOneElement& scale(const MultiPoly& f);
    bool operator==(const HOneElement&) const = default;
    std::string to_string() const;
};

HOneElement h_one(const AbelianClass& c);
HOneElement h_one_eval(const GaugeData& g, const RTree& t);

}  // namespace coulomb
