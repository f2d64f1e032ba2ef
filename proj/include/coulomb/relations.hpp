#pragma once

#include <string>
#include <vector>

#include "coulomb/gklo.hpp"

namespace coulomb {

/// Whitespace-separated expression over generator images. Atoms: A(i,p),
/// E(i,p), F(i,p) (1-based vertex), w(i,r), z(k), u(i,r), h, e (symmetrizer),
/// and rational literals a or a/b. Prefix operators commutator, poisson,
/// product take two factors; infix * binds tighter than + and -; a leading -
/// negates; parentheses group and must be free-standing tokens.
SmashElement parse_expression(const GaugeData& g, const std::string& text);

struct RelationReport {
    bool pass = true;
    std::vector<std::string> lines;
};

/// One relation per line: EXPR equals EXPR; '#' comments and blank lines are
/// skipped. Each line yields "PASS <relation>" or "FAIL <relation> lhs=...
/// rhs=..." with both sides serialized in the requested mode; parse errors
/// carry the line number.
RelationReport check_relations(const GaugeData& g, const std::string& text,
                               HMode mode = HMode::Symbolic);

}  // namespace coulomb
