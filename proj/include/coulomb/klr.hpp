#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coulomb/gklo.hpp"

namespace coulomb {

/// Elementary cylinder slice acting on a vertex sequence. Strand positions are
/// 0-based; Psi crosses the strands at positions k, k+1, Dot marks position k.
/// SigmaPlus wraps the rightmost strand across the seam (re-entering leftmost),
/// SigmaMinus the leftmost strand (re-entering rightmost); the other strands
/// shift one position toward the vacated side. bot is the slice's own bottom
/// sequence; empty means inferred from context.
struct Slice {
    enum class Kind { E, Psi, SigmaPlus, SigmaMinus, Dot };

    Kind kind = Kind::E;
    int k = 0;
    std::vector<int> bot;

    static Slice e() { return {Kind::E, 0, {}}; }
    static Slice psi(int k) { return {Kind::Psi, k, {}}; }
    static Slice sigma_plus() { return {Kind::SigmaPlus, 0, {}}; }
    static Slice sigma_minus() { return {Kind::SigmaMinus, 0, {}}; }
    static Slice dot(int k) { return {Kind::Dot, k, {}}; }
};

/// Top sequence of one slice over the given bottom sequence; validates k.
std::vector<int> slice_top(const Slice& s, const std::vector<int>& bot);

/// Stack of elementary slices on the cylinder, bottom to top. Strands are
/// labelled by quiver vertices; the bottom and top sequences list the labels
/// left to right, with the r-th occurrence of i carrying slot (i, r). Strand
/// positions sit at the equal partition (p+1)/(m+1) of the circle (m strands).
class CylDiagram {
  public:
    static CylDiagram make(const GaugeData& g, std::vector<int> bot, std::vector<Slice> slices);

    const GaugeData& data() const { return *g_; }
    const std::vector<int>& bot() const { return bot_; }
    const std::vector<int>& top() const { return top_; }
    /// Slices with their bottom sequences filled in.
    const std::vector<Slice>& slices() const { return slices_; }

  private:
    const GaugeData* g_ = nullptr;
    std::vector<int> bot_, top_;
    std::vector<Slice> slices_;
};

/// Validates a nonempty slice list: each declared bottom sequence must match
/// the running top of the previous slice, and the labels must realize the
/// gauge dimension vector.
CylDiagram parse_diagram(const GaugeData& g, const std::vector<Slice>& slices);

/// Header "objects: <bottom sequence>" then one line per slice: "e", "psi k",
/// "sigma +", "sigma -", "dot k"; labels and k printed 1-based.
std::string diagram_to_text(const CylDiagram& d);
CylDiagram diagram_from_text(const GaugeData& g, const std::string& text);

/// One wall crossing of a lifted strand path. Root: the wall
/// w[i,r] - w[i,s] = n h between same-label strands. Framing: the wall
/// w[i,r] = n h, present only when vertex i carries framing or coframing.
/// Arrow: the wall w[i,r] - w[j,s] = n h for an arrow i -> j (i = tail,
/// j = head). dir = +1 when the defining difference increases through the
/// wall, -1 when it decreases. Slots and walls are in bottom-of-diagram
/// coordinates; windings enter through n.
struct CrossingEvent {
    enum class Kind { Root, Framing, Arrow };

    Kind kind = Kind::Root;
    int i = 0, r = 0;
    int j = 0, s = 0;
    int n = 0;
    int dir = 1;

    std::string to_string() const;
    bool operator==(const CrossingEvent&) const = default;
};

/// Lift of a diagram to the universal cover: the wall crossings in time order
/// and the terminal group element, the unique w with final lift = w . eta_top
/// under the point action. A strand of bottom slot (i,r) ending at top slot
/// (i,s) with winding n contributes perm(s) = r and shift lam_{i,r} = -n.
struct UnrolledPath {
    std::vector<CrossingEvent> events;
    ExtAffineWeyl terminal;
};

UnrolledPath unroll(const CylDiagram& d);

/// Difference-operator value: terminal^{-1} * (x_l ... x_1) with one factor
/// per event in time order, x_1 first. Root events give the localized
/// difference (1/alpha)(1 - t) with t the affine reflection in the wall and
/// alpha the root positive on the source side. Framing events give, crossing
/// downward, the product of (w[i,r] - z_k - (n - 1/2) h) over the flavours at
/// i, and crossing upward (w[i,r] - (n - 1/2) h)^c with c the coframing
/// multiplicity. Arrow events give (w[j,s] - w[i,r] + (n + 1/2) h) when the
/// tail-minus-head difference increases, identity when it decreases. A dot at
/// position k multiplies, at its time, by (w[i,r] - n h) for the strand's
/// bottom slot and current winding.
SmashElement evaluate(const CylDiagram& d);

/// d1 on top of d2; requires bot(d1) == top(d2). Evaluations compose:
/// evaluate(stack(d1, d2)) == evaluate(d1) * evaluate(d2).
CylDiagram stack(const CylDiagram& d1, const CylDiagram& d2);

struct IsotopyReport {
    bool pass = false;
    std::string lhs, rhs;
};

/// Equal boundary sequences and exactly equal evaluations.
IsotopyReport isotopy_check(const CylDiagram& a, const CylDiagram& b);

/// All diagrams obtained from d by swapping one adjacent slice pair whose
/// position supports are disjoint (seam slices never slide).
std::vector<CylDiagram> slide_variants(const CylDiagram& d);

/// Number of arrangement walls separating the bottom configuration from
/// w^{-1} . eta_top, the lift endpoint of a diagram with terminal w^{-1} and
/// hence leading support element w: root walls per vertex, framing walls at
/// framed or coframed vertices, arrow walls per arrow. Lower bound for the
/// crossing count of any such diagram, attained by minimal diagrams.
int wall_length(const GaugeData& g, const std::vector<int>& bot, const std::vector<int>& top,
                const ExtAffineWeyl& w);

struct BasisDiagram {
    ExtAffineWeyl w;
    int length = 0;
    CylDiagram diagram;
};

/// Minimal-crossing diagram for every group element w realizable from bot to
/// top with at most bound crossings, found by 0/1 breadth-first search over
/// strand arrangements (crossings without a wall are free); w labels the
/// evaluation by its leading support element, the inverse of the terminal.
/// Sorted by (length, w). Intermediate windings are capped at bound + 2,
/// which is no restriction when every vertex carries a wall family.
std::vector<BasisDiagram> basis_diagrams(const GaugeData& g, const std::vector<int>& bot,
                                         const std::vector<int>& top, int bound);

struct TriangularityReport {
    bool pass = true;
    std::vector<std::string> lines;
};

/// Certifies, per basis entry: length == wall_length(w), w lies in the group
/// support of the evaluation, and every other support element is strictly
/// shorter. Together with the pairwise distinct labels this exhibits the
/// evaluations as triangular with nonzero diagonal.
TriangularityReport triangularity_check(const GaugeData& g, const std::vector<int>& bot,
                                        const std::vector<int>& top,
                                        const std::vector<BasisDiagram>& basis);

/// Wrap diagram at the given bottom sequence: for sign +1 the last i-strand
/// crosses every other strand rightward and the seam once; for sign -1 the
/// first i-strand does so leftward. Same-label crossings happen after the
/// seam, so the divided differences act outermost; dot slices on the wrapped
/// strand follow the seam crossing directly. bot == top.
CylDiagram wrap_diagram(const GaugeData& g, const std::vector<int>& bot, int i, int sign,
                        int dots = 0);

struct WrapReport {
    bool pass = false;
    int sign = 0;
    std::string lhs, rhs;
};

/// Compares e * evaluate(wrap) * e at the canonical sequence against
/// iwahori_monopole for the unit coweight at vertex i (sign +1: dominant unit,
/// dressing w[i,1]^{p-1}; sign -1: antidominant unit, dressing w[i,v_i]^{p-1}).
/// pass means equality up to an overall sign, which is reported.
WrapReport wrap_vs_iwahori(const GaugeData& g, int i, int sign, int p = 1);

}  // namespace coulomb
