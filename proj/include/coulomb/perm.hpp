#pragma once

#include <string>
#include <vector>

namespace coulomb {

/// One-line permutation of {0..n-1}: p[r] is the image of r.
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_is_identity(const Perm& p);
/// (p * q)(r) = p(q(r)).
Perm perm_mul(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
/// Adjacent transposition swapping a, a+1.
Perm perm_adjacent(int n, int a);
int perm_length(const Perm& p);  // inversion count
int perm_sign(const Perm& p);
Perm perm_longest(int n);  // r -> n-1-r
/// Word (a_1..a_l) with p = s_{a_1} * ... * s_{a_l}; leftmost-descent strip.
std::vector<int> reduced_word(Perm p);
Perm perm_of_word(int n, const std::vector<int>& word);
std::vector<Perm> all_perms(int n);
/// One-line, 1-based, space-separated: "2 1 3".
std::string perm_to_string(const Perm& p);

}  // namespace coulomb
