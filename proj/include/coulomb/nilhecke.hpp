#pragma once

#include <utility>
#include <vector>

#include "coulomb/smash.hpp"

namespace coulomb {

/// Word in the simple transpositions (vertex i, adjacent index a).
using ReducedWord = std::vector<std::pair<int, int>>;

/// The divided difference (w[i,a]-w[i,a+1])^{-1}(1 - s_{i,a}) as an element.
SmashElement divided_difference(const GaugeData& g, int i, int a);

/// Product of divided differences along the word. Throws "word not reduced"
/// when the underlying permutation drops length.
SmashElement demazure(const GaugeData& g, const ReducedWord& word);

/// Reduced word for the longest element of the full product group.
ReducedWord longest_word(const GaugeData& g);

/// Reduced word for a single vertex permutation.
ReducedWord vertex_word(int i, const Perm& p);

/// Averaging idempotent e = (1/|Sigma|) sum over the product group.
SmashElement symmetrizer(const GaugeData& g);

/// sign * (1/|Sigma|) * Demazure(w0) * (multiplication by the positive-root
/// product); sign fixed per gauge data by requiring the square to be e.
std::pair<int, SmashElement> geometric_symmetrizer(const GaugeData& g);

MultiPoly schubert(const GaugeData& g, int i, const Perm& sigma);

enum class DualBasisKind { Staircase, Schubert };

/// Paired families with Demazure(w0)(x_t * y_u) = delta_{t,u}.
struct DualBases {
    std::vector<MultiPoly> x, y;
};

DualBases dual_bases(const GaugeData& g, DualBasisKind kind = DualBasisKind::Staircase);

/// The resolution of unity 1 = sum_t x_t * Demazure(w0) * y_t.
bool verify_dual_bases(const GaugeData& g, const DualBases& b);

}  // namespace coulomb
