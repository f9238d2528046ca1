#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcov/body.hpp"

namespace homcov {

/// A claimed cover K `subset` union_i (centers[i] + gamma * K), with K in its
/// given coordinates. gamma in (0,1]; gamma = 0 is tolerated in memory only
/// for covers of single-point bodies (hull-decomposition parts).
struct HomothetCover {
    double gamma = 1.0;
    std::vector<Vec> centers;
    std::string body_ref;
};

enum class VerdictKind { Covered, Uncovered, Unknown };

struct CoverVerdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::optional<Vec> witness;   // Uncovered: a point of K in no homothet
    double resolution = 0.0;      // smallest cell diameter reached
    std::uint64_t cells_processed = 0;
};

/// Certified cover verification by simplicial subdivision.
///
/// A cell whose vertices all sit in one homothet is covered (convexity).
/// Uncovered witnesses are searched at cell centroids and validated against
/// every homothet. Cells that localize to at most two candidate homothets,
/// or that reach the eps floor, are settled exactly by clipping the cell
/// against the homothets; only tolerance-thin residues yield Unknown.
/// eps <= 0 selects the default floor of 1e-4 times the body diameter.
CoverVerdict verify_cover(const ConvexBody& body, const HomothetCover& cover, double eps = 0.0);

/// Single-threaded reference implementation (depth-first); same verdicts,
/// kept for cross-checking and benchmarking the parallel kernel.
CoverVerdict verify_cover_serial(const ConvexBody& body, const HomothetCover& cover,
                                 double eps = 0.0);

/// Least gamma (within tol) covering the body from the given fixed centers,
/// found by bisection on verify_cover. The returned value was certified
/// Covered; one bisection step below it failed to certify. Empty when even
/// gamma = 1 does not cover ("no sub-unit cover").
std::optional<double> min_gamma_for_centers(const ConvexBody& body,
                                            const std::vector<Vec>& centers,
                                            double tol = Tolerances::global().optimization);

/// Smallest ratio (within tol) placing x in center + gamma*K. Requires the
/// origin interior to K (origin-normalized body).
double gamma_of_point(const ConvexBody& body, const Vec& center, const Vec& x);

struct GammaUpperResult {
    double gamma = 1.0;
    HomothetCover cover;
};

/// Upper-bounds the m-translate covering ratio by multi-start local search:
/// samples of K are assigned to their best center, each center re-solves a
/// one-center gauge problem (an LP), and the best restart is certified by
/// min_gamma_for_centers. Deterministic for a fixed seed. Returns the
/// identity cover (gamma = 1) when nothing better certifies. budget caps the
/// total number of center-update LP solves across restarts.
GammaUpperResult gamma_upper(const ConvexBody& body, int m, long budget, std::uint64_t seed,
                             const std::optional<HomothetCover>& warm_start = std::nullopt);

}  // namespace homcov
