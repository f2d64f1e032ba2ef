#include "coulomb/rational.hpp"

#include <cctype>

namespace coulomb {

std::string scalar_to_string(const Scalar& q) {
    return q.get_str();
}

Scalar scalar_parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("scalar: empty literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("scalar: bad character in '" + text + "'");
    }
    Scalar q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("scalar: malformed literal '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("scalar: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace coulomb
