#pragma once

#include "dp5/picard_lattice.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dp5 {

struct ReductionStep {
    DivisorClass curve;
    Integer multiplicity;
};

struct H0Result {
    Integer value;
    /// Fixed curves subtracted, in order.
    std::vector<ReductionStep> trace;
    /// Class left after the reduction loop.
    DivisorClass moving;
};

class ReductionFault : public std::runtime_error {
public:
    ReductionFault(const std::string& what, std::vector<ReductionStep> trace)
        : std::runtime_error(what), trace(std::move(trace)) {}
    std::vector<ReductionStep> trace;
};

H0Result h0_with_trace(const DivisorClass& d, const SurfaceConfiguration& cfg);
Integer h0(const DivisorClass& d, const SurfaceConfiguration& cfg);
bool is_effective(const DivisorClass& d, const SurfaceConfiguration& cfg);

/// True iff d is a non-negative integer combination of the (-2)-curves of cfg.
bool is_minus_two_combination(const DivisorClass& d, const SurfaceConfiguration& cfg);

/// GENERAL configuration: every d with |coefficients| <= bound, h0(d) > 1 and -K-2d effective.
std::vector<DivisorClass> verify_lemma_4_5(int coefficient_bound, bool require_effective_residual = true);

}  // namespace dp5
