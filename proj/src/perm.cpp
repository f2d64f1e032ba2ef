#include "coulomb/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coulomb {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool perm_is_identity(const Perm& p) {
    for (int r = 0; r < static_cast<int>(p.size()); ++r)
        if (p[r] != r) return false;
    return true;
}

Perm perm_mul(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("perm_mul: size mismatch");
    Perm out(p.size());
    for (std::size_t r = 0; r < q.size(); ++r) out[r] = p[q[r]];
    return out;
}

Perm perm_inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t r = 0; r < p.size(); ++r) out[p[r]] = static_cast<int>(r);
    return out;
}

Perm perm_adjacent(int n, int a) {
    if (a < 0 || a + 1 >= n) throw std::invalid_argument("perm_adjacent: slot out of range");
    Perm p = perm_identity(n);
    std::swap(p[a], p[a + 1]);
    return p;
}

int perm_length(const Perm& p) {
    int len = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++len;
    return len;
}

int perm_sign(const Perm& p) { return perm_length(p) % 2 == 0 ? 1 : -1; }

Perm perm_longest(int n) {
    Perm p(n);
    for (int r = 0; r < n; ++r) p[r] = n - 1 - r;
    return p;
}

std::vector<int> reduced_word(Perm p) {
    // Strip right descents: p(a) > p(a+1) means len(p * s_a) = len(p) - 1.
    std::vector<int> stripped;
    const int n = static_cast<int>(p.size());
    bool moved = true;
    while (moved) {
        moved = false;
        for (int a = 0; a + 1 < n; ++a) {
            if (p[a] > p[a + 1]) {
                std::swap(p[a], p[a + 1]);
                stripped.push_back(a);
                moved = true;
                break;
            }
        }
    }
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
}

Perm perm_of_word(int n, const std::vector<int>& word) {
    Perm p = perm_identity(n);
    for (int a : word) p = perm_mul(p, perm_adjacent(n, a));
    return p;
}

std::vector<Perm> all_perms(int n) {
    Perm p = perm_identity(n);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string perm_to_string(const Perm& p) {
    std::string s;
    for (std::size_t r = 0; r < p.size(); ++r) {
        if (r) s += ' ';
        s += std::to_string(p[r] + 1);
    }
    return s;
}

}  // namespace coulomb
