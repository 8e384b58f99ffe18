#pragma once

// Shared vocabulary for the six simple equivariant D-modules on the space of
// alternating 3-forms in six variables and the five GL_6 orbits of that
// space, together with the orbit geometry (dimensions, closure order) and
// the Fourier permutation of orbits induced by projective duality.

#include <array>
#include <stdexcept>
#include <string>

namespace trivec {

/// The six simple objects, named by their supports: S has full support, B4
/// lives on the hypersurface, D3/D2/D1 on the smaller orbit closures, and E
/// is supported at the origin.
enum class SimpleLabel { S, D1, D2, D3, B4, E };

/// The five orbits, indexed so that the closure of Ok is the union of all
/// Oj with j <= k.
enum class OrbitLabel { O0, O1, O2, O3, O4 };

inline constexpr std::array<SimpleLabel, 6> allSimpleLabels = {
    SimpleLabel::S,  SimpleLabel::D1, SimpleLabel::D2,
    SimpleLabel::D3, SimpleLabel::B4, SimpleLabel::E};

inline constexpr std::array<OrbitLabel, 5> allOrbitLabels = {
    OrbitLabel::O0, OrbitLabel::O1, OrbitLabel::O2, OrbitLabel::O3, OrbitLabel::O4};

inline std::string to_string(SimpleLabel l) {
    switch (l) {
        case SimpleLabel::S: return "S";
        case SimpleLabel::D1: return "D1";
        case SimpleLabel::D2: return "D2";
        case SimpleLabel::D3: return "D3";
        case SimpleLabel::B4: return "B4";
        case SimpleLabel::E: return "E";
    }
    throw std::invalid_argument("to_string: bad SimpleLabel");
}

inline std::string to_string(OrbitLabel o) {
    switch (o) {
        case OrbitLabel::O0: return "O0";
        case OrbitLabel::O1: return "O1";
        case OrbitLabel::O2: return "O2";
        case OrbitLabel::O3: return "O3";
        case OrbitLabel::O4: return "O4";
    }
    throw std::invalid_argument("to_string: bad OrbitLabel");
}

inline SimpleLabel parseSimpleLabel(const std::string& text) {
    for (SimpleLabel l : allSimpleLabels)
        if (to_string(l) == text) return l;
    throw std::invalid_argument("parseSimpleLabel: unknown label '" + text + "'");
}

inline OrbitLabel parseOrbitLabel(const std::string& text) {
    for (OrbitLabel o : allOrbitLabels)
        if (to_string(o) == text) return o;
    throw std::invalid_argument("parseOrbitLabel: unknown orbit '" + text + "'");
}

/// Index of the orbit in the closure chain O0 < O1 < O2 < O3 < O4.
inline int orbitIndex(OrbitLabel o) { return static_cast<int>(o); }

/// Complex dimension of the orbit inside the 20-dimensional ambient space.
inline int orbitDim(OrbitLabel o) {
    constexpr std::array<int, 5> dims = {0, 10, 15, 19, 20};
    return dims[static_cast<std::size_t>(o)];
}

/// Codimension of the orbit closure in the ambient 20-dimensional space.
inline int orbitCodim(OrbitLabel o) { return 20 - orbitDim(o); }

/// Whether the closure of `outer` contains the orbit `inner`. The orbit
/// poset is the chain O0 < O1 < O2 < O3 < O4.
inline bool closureContains(OrbitLabel outer, OrbitLabel inner) {
    return orbitIndex(inner) <= orbitIndex(outer);
}

/// The permutation of orbits induced by the Fourier transform via projective
/// duality: the origin and the open orbit swap, the 10- and 19-dimensional
/// orbits swap, and the 15-dimensional orbit is self-dual.
inline OrbitLabel fourierOrbit(OrbitLabel o) {
    constexpr std::array<OrbitLabel, 5> image = {OrbitLabel::O4, OrbitLabel::O3,
                                                 OrbitLabel::O2, OrbitLabel::O1,
                                                 OrbitLabel::O0};
    return image[static_cast<std::size_t>(o)];
}

}  // namespace trivec
