#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace coulomb {

/// Identifies one generator of the ambient polynomial ring:
/// w[i,r] (gauge), z[k] (flavour) or h (loop parameter).
/// Indices are 0-based internally; serialization is 1-based.
struct VarId {
    enum class Kind : std::uint8_t { Gauge = 0, Flavour = 1, Loop = 2 };

    Kind kind = Kind::Loop;
    std::int32_t a = 0;  // Gauge: vertex.  Flavour: flavour index.
    std::int32_t b = 0;  // Gauge: slot within vertex.

    static VarId gauge(int vertex, int slot) { return {Kind::Gauge, vertex, slot}; }
    static VarId flavour(int k) { return {Kind::Flavour, k, 0}; }
    static VarId loop() { return {Kind::Loop, 0, 0}; }

    auto operator<=>(const VarId&) const = default;

    std::string to_string() const;
};

}  // namespace coulomb
