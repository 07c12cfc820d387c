#pragma once

/**
 * @file types.hpp
 * @brief Core value types for minimum-energy forward-motion oscillator trajectories.
 *
 * The plant is the unit harmonic oscillator
 *     x1' = x2,   x2' = -x1 + u
 * driven between rest states (s, 0) -> (x_f, 0) over a fixed horizon [0, T],
 * minimizing the applied energy J = 1/2 * integral of u^2, subject to the
 * forward-motion constraint x2 >= 0.
 */

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscmin {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorCode {
    InvalidArgument,  ///< malformed input (non-finite, bad horizon, ...)
    InfeasibleTarget, ///< x_f < s: forward motion cannot reach the target
    NotActivated,     ///< constrained solve found no junction root
    SingularMatrix,   ///< pivot collapse in a linear solve
    InvalidBracket,   ///< root bracket without a sign change
    NoMinimum,        ///< scan found no interior minimum to refine
    IterationLimit,   ///< an iteration cap was exceeded
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::InfeasibleTarget: return "infeasible_target";
        case ErrorCode::NotActivated: return "not_activated";
        case ErrorCode::SingularMatrix: return "singular_matrix";
        case ErrorCode::InvalidBracket: return "invalid_bracket";
        case ErrorCode::NoMinimum: return "no_minimum";
        case ErrorCode::IterationLimit: return "iteration_limit";
    }
    return "unknown";
}

/// Single exception type carrying a machine-readable code plus diagnostics.
class SolverError : public std::runtime_error {
  public:
    SolverError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

// ---------------------------------------------------------------------------
// Problem data
// ---------------------------------------------------------------------------

/**
 * @brief Two-point boundary problem: (s, 0) -> (x_f, 0) over [0, T].
 *
 * Invariants: T > 0 and x_f >= s (x_f < s is rejected before solving; the
 * velocity constraint forbids moving backward).
 */
struct BoundaryProblem {
    double s = 0.0;   ///< initial position, initial velocity is 0
    double x_f = 0.0; ///< final position, final velocity is 0
    double T = 1.0;   ///< horizon, must be positive
};

/// Throws SolverError on a malformed or unreachable problem.
void validate(const BoundaryProblem& p);

/// Solver knobs. All tolerances are absolute.
struct SolverConfig {
    double feas_tol = 1e-9;      ///< constraint slack allowed by feasibility checks
    double junction_tol = 1e-10; ///< root-finding tolerance on junction times
    int grid_n = 4096;           ///< feasibility scan density over the whole horizon
    int max_iter = 200;          ///< iteration cap for scalar kernels
};

// ---------------------------------------------------------------------------
// Closed-form arcs
// ---------------------------------------------------------------------------

/**
 * @brief Coefficients of one unconstrained arc.
 *
 * On an arc where the velocity constraint is inactive the extremal is
 *     x1(t) = c1 cos t + c2 sin t + c3 t cos t + c4 t sin t
 * with x2 and u given by the matching closed forms. Times are always global
 * (measured from the start of the horizon, not the start of the arc).
 */
struct ArcCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
};

enum class ArcKind { Free, Hold };

inline const char* to_string(ArcKind k) { return k == ArcKind::Free ? "free" : "hold"; }

/**
 * @brief One piece of a trajectory: either a free (unconstrained) arc or a
 *        hold arc pinned at (x1s, 0) with constant control u = x1s.
 *
 * Hold arcs are symbolic: they carry only the hold position, never a
 * degenerate coefficient set.
 */
struct Arc {
    ArcKind kind = ArcKind::Free;
    double t_start = 0.0;
    double t_end = 0.0;
    ArcCoefficients coeffs{}; ///< meaningful for Free arcs only
    double hold_position = 0.0; ///< meaningful for Hold arcs only

    static Arc free_arc(const ArcCoefficients& c, double t0, double t1) {
        Arc a;
        a.kind = ArcKind::Free;
        a.coeffs = c;
        a.t_start = t0;
        a.t_end = t1;
        return a;
    }
    static Arc hold_arc(double x1s, double t0, double t1) {
        Arc a;
        a.kind = ArcKind::Hold;
        a.hold_position = x1s;
        a.t_start = t0;
        a.t_end = t1;
        return a;
    }
    double duration() const { return t_end - t_start; }
};

// ---------------------------------------------------------------------------
// Assembled solutions
// ---------------------------------------------------------------------------

enum class Mode { Unconstrained, WaitMove, MoveWait, MoveWaitMove, Hold };

inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::Unconstrained: return "unconstrained";
        case Mode::WaitMove: return "wait_move";
        case Mode::MoveWait: return "move_wait";
        case Mode::MoveWaitMove: return "move_wait_move";
        case Mode::Hold: return "hold";
    }
    return "unknown";
}

/**
 * @brief Piecewise optimal trajectory: ordered arcs tiling [0, T] exactly.
 *
 * Adjacent arcs share endpoints; state and control are continuous across
 * junctions to solver tolerance.
 */
struct PiecewiseSolution {
    BoundaryProblem problem{};
    std::vector<Arc> arcs{};
    Mode mode = Mode::Unconstrained;
    double cost = 0.0; ///< J = 1/2 * integral of u^2, always >= 0
};

/// Instantaneous state and control.
struct StateSample {
    double x1 = 0.0;
    double x2 = 0.0;
    double u = 0.0;
};

/// Costate diagnostics at one instant (Pontryagin conditions, u = -lambda2).
struct AdjointSample {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double mu = 0.0; ///< constraint multiplier; 0 on free arcs, expected >= 0 on holds
    double hamiltonian = 0.0;
};

// ---------------------------------------------------------------------------

inline void validate(const BoundaryProblem& p) {
    auto finite = [](double v) { return v == v && v < 1e300 && v > -1e300; };
    if (!finite(p.s) || !finite(p.x_f) || !finite(p.T)) {
        throw SolverError(ErrorCode::InvalidArgument, "boundary problem has non-finite data");
    }
    if (!(p.T > 0.0)) {
        throw SolverError(ErrorCode::InvalidArgument, "horizon T must be positive");
    }
    if (p.x_f < p.s) {
        throw SolverError(ErrorCode::InfeasibleTarget,
                          "x_f < s: forward-only motion cannot reach the target");
    }
}

} // namespace oscmin
