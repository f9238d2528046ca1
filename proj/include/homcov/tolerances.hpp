#pragma once

namespace homcov {

/// Central numeric tolerances. Double precision throughout; desk-scale
/// coordinates (|x| up to ~1e3) are assumed by the defaults.
struct Tolerances {
    double geometric = 1e-9;        // predicate tolerance (containment, boundary, ...)
    double optimization = 1e-6;     // bisection / optimizer targets
    double coplanar_normal = 1e-7;  // facet-merging threshold on normal deviation
    double lp_pivot = 1e-10;        // simplex pivot threshold
    double lp_feasibility = 1e-8;   // feasibility slack for reported LP optima

    static const Tolerances& global() {
        static Tolerances t;
        return t;
    }
};

}  // namespace homcov
