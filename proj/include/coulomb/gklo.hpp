#pragma once

#include <map>
#include <string>
#include <vector>

#include "coulomb/abelian.hpp"
#include "coulomb/nilhecke.hpp"

namespace coulomb {

enum class GenTag { A, E, F };

struct YangianGenerator {
    GenTag tag = GenTag::A;
    int i = 0;  // vertex, 0-based
    int p = 1;

    std::string to_string() const;  // "A(1,2)", indices 1-based
};

/// Difference-operator image of a generator. A(i,p) needs p <= v_i; E/F at a
/// vertex with v_i = 0 are zero.
SmashElement image(const GaugeData& g, const YangianGenerator& gen);

/// Dressed minuscule monopole data: lam is 0, the dominant unit coweight
/// (1,0,...,0) at one vertex, or its dual (0,...,0,-1); the dressing f must be
/// invariant under the stabilizer of lam.
struct MonopoleSpec {
    Coweight lam;
    MultiPoly f;
};

void validate_monopole_spec(const GaugeData& g, const MonopoleSpec& spec);

/// Weyl-sum form: prefactor * sum_r sigma_r(f) * Phi(sign*eps_{i,r}) /
/// prod_{s != r}(w_r - w_s) * u_r^{sign}. The prefactor is
/// (-1)^{sum over arrows i->j of v_j} on the positive side and (-1)^{v_i + 1}
/// on the negative side.
SmashElement dressed_monopole(const GaugeData& g, const MonopoleSpec& spec);

/// Demazure(w0 w_lam) * f * r_lam * e.
SmashElement iwahori_monopole(const GaugeData& g, const MonopoleSpec& spec);

struct CrosscheckReport {
    bool pass = false;
    int sign = 1;  // global sign relating the two realizations
    std::vector<std::string> mismatches;
};

/// Compares e * iwahori_monopole * e with dressed_monopole acting on the
/// given Weyl-invariant test polynomials.
CrosscheckReport crosscheck_spherical(const GaugeData& g, const MonopoleSpec& spec,
                                      const std::vector<MultiPoly>& test_polys);

struct MonopoleTerm {
    MultiPoly x, f, y;
};

struct MonopoleDecomposition {
    int sign = 1;        // documented prefactor recovered by the reassembly
    Coweight lam;        // dominant orbit representative used for the monopoles
    std::vector<MonopoleTerm> terms;
    SmashElement reassembled;  // sum u_mu(x) * (e*M_{lam,f}*e) * Demazure(w0) * y
};

/// Expresses r_mu (mu a unit coweight) through spherical dressed monopoles:
/// Lagrange dressings isolate the mu-summand of the Weyl sum, dual bases and
/// the twist by u_mu supply the flanking factors. The dressing solve runs as a
/// linear system over polynomial coefficients up to degree_bound.
MonopoleDecomposition abelian_from_monopoles(const GaugeData& g, const Coweight& mu,
                                             int degree_bound = 6);

struct CheckReport {
    bool pass = true;
    std::vector<std::string> lines;
};

/// Exact identities: A-images commute, [E(i,1),F(j,1)] = 0 off the diagonal,
/// [E(i,1),F(i,1)] is a Weyl-invariant h-divisible rational function, weights
/// and homogeneity of all generator images.
CheckReport verify_relations(const GaugeData& g);

/// Truncated expansion in u^{-1} with polynomial coefficients.
struct USeries {
    int order = 0;                   // coefficients kept down to u^{-order}
    std::map<int, MultiPoly> coeff;  // exponent -> coefficient

    MultiPoly at(int k) const;
    std::string to_string() const;
};

/// H_i(u) = p_i(u) * prod_{j ~ i} A~_j(u - h/2) / (A~_i(u) * A~_i(u - h))
/// with A~_i(u) = prod_r (u - w[i,r]) monic and p_i(u) = prod_k (u - z_k)
/// over flavours at i times u^{coframing_i}.
USeries h_series(const GaugeData& g, int i, int order);

/// Enlarges the framing (flavour parameters pinned to 0) and the coframing by
/// eta and verifies which generator images are literally preserved: F under
/// extra framing, E under extra coframing; the other side gains the
/// documented factor per term.
CheckReport shift_check(const GaugeData& g, const std::vector<int>& eta);

/// (1/h)(ab - ba) followed by h -> 0 in the coefficients.
SmashElement poisson_bracket(const SmashElement& a, const SmashElement& b);

}  // namespace coulomb
