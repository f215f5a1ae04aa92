#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "igd/interpolation.hpp"
#include "igd/vec.hpp"

namespace igd {

// Which normalization the one-step worst-case search uses:
//   ToFstar: f0 - f* = 1, star point present, all six interpolation pairs.
//   ToF1:    f0 - f1 = 1, star point omitted, only the {0,1} pairs.
enum class PepCriterion { ToF1, ToFstar };

const char* to_string(PepCriterion c);

// A full candidate configuration of the one-step problem: labeled points
// for indices {0, 1, *}, the inexact direction d0, and the objective
// |g1|^2. x0 is pinned at the origin and g0 = (a, 0) with a > 0
// (translation and rotation symmetry).
struct PepCandidate {
    PepPoint p0;
    PepPoint p1;
    PepPoint pstar;  // meaningful only for ToFstar
    Vec d0;
    PepCriterion criterion = PepCriterion::ToFstar;
    double objective = 0.0;
    double h = 0.0;
    double delta = 0.0;
};

struct NamedSlack {
    std::string name;
    double value = 0.0;
};

// Recomputes every constraint slack of the candidate from scratch
// (inexactness ball, algorithm step consistency, interpolation pairs,
// normalization). Independent of the search path that produced it.
std::vector<NamedSlack> candidate_slacks(const PepCandidate& cand);
double candidate_min_slack(const PepCandidate& cand);

struct SearchConfig {
    double h = 0.0;
    double delta = 0.0;
    PepCriterion criterion = PepCriterion::ToFstar;
    int dimension = 2;  // 1 restricts every y-component to zero
    int budget = 1000;  // number of multi-starts
    std::uint64_t seed = 0;
    int refine_iters = 400;
    double feas_tol = 1e-9;
    std::vector<PepCandidate> extra_seeds;
};

struct SearchResult {
    bool found = false;
    double value = 0.0;
    PepCandidate best;
    int best_start = -1;
};

// Multi-start randomized lower-bound search: analytic seed candidates
// (scaled-oracle Huber and quadratic configurations plus the two saturating
// bivariate directions) and random starts, each refined by an annealed
// coordinate perturbation walk against a penalty-augmented objective, then
// projected back to feasibility and revalidated from scratch. Deterministic
// for fixed (inputs, seed, budget). Returned values are feasible, hence
// valid lower bounds on the true worst case.
SearchResult search_one_step(const SearchConfig& config);

struct CompareResult {
    SearchResult dim1;
    SearchResult dim2;
};

// Runs the 1D-restricted search, then the 2D search with the 1D winner
// injected as an extra seed, so dim2.value >= dim1.value up to refinement
// noise.
CompareResult compare_1d_2d(double h, double delta, int budget, std::uint64_t seed);

struct OrthoDiagnostic {
    bool defined = false;
    double error_vs_gradient = 0.0;   // <d0-g0, g0> / (|d0-g0| |g0|)
    double error_vs_direction = 0.0;  // <d0-g0, d0> / (|d0-g0| |d0|)
};

// Normalized alignment of the error vector with the true gradient (the
// quantity conjectured to vanish at the optimal stepsize), plus its
// alignment with the direction itself; undefined when the gradient or the
// error vanishes.
OrthoDiagnostic orthogonality_diagnostic(const PepCandidate& cand);

// JSON object with all point coordinates, d0, objective and named slacks.
std::string candidate_json(const PepCandidate& cand);

}  // namespace igd
