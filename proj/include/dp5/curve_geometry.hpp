#pragma once

#include "dp5/picard_lattice.hpp"

#include <vector>

namespace dp5 {

enum class CurveKind { MinusOne, MinusTwo };

struct NegativeCurve {
    DivisorClass cls;
    CurveKind kind;
    friend bool operator==(const NegativeCurve&, const NegativeCurve&) = default;
};

/// Chain differences and the collinearity class.
std::vector<NegativeCurve> minus_two_curves(const SurfaceConfiguration& cfg);
std::vector<NegativeCurve> minus_one_curves(const SurfaceConfiguration& cfg);
/// (-1)-curves first, then (-2)-curves; the vertex order of incidence_graph.
std::vector<NegativeCurve> negative_curves(const SurfaceConfiguration& cfg);

std::vector<std::vector<Integer>> incidence_graph(const SurfaceConfiguration& cfg);

/// Throws std::invalid_argument unless d is a (-1)- or (-2)-class.
bool is_irreducible(const DivisorClass& d, const SurfaceConfiguration& cfg);

/// The 10 classes with C^2 = C.K = -1.
std::vector<DivisorClass> minus_one_classes();
/// All 20 classes with C^2 = -2, C.K = 0, found by a bounded lattice scan.
std::vector<DivisorClass> root_classes();

/// Classes f with f^2 = 0, -K.f = 2, h0(f) >= 2 and f.C >= 0 on every negative curve.
std::vector<DivisorClass> ruling_classes(const SurfaceConfiguration& cfg, bool require_minus_two_orthogonal);

}  // namespace dp5
