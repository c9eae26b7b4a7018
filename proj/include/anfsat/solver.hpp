#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "anfsat/anf.hpp"
#include "anfsat/implicants.hpp"

namespace anfsat {

/// Product formula F = f1 * f2 * ... * fm over a shared ambient variable
/// count. An empty factor list is the constant-1 formula.
struct Formula {
    std::vector<AnfPoly> factors;
    VarId num_vars = 0;
};

enum class PivotPolicy {
    MinVars,   // smallest support, ties by lowest factor index
    First,     // factor 0
    MinTerms,  // fewest monomials, ties by lowest factor index
};

struct SolveConfig {
    PivotPolicy pivot = PivotPolicy::MinVars;
    VarOrder order = VarOrder::Index;
    unsigned workers = 0;        // 0 = one per hardware thread
    bool first_solution = false; // decision mode: stop after one implicant
};

/// Work accounting. A segment is one executed task, i.e. one
/// (prefix, reduced formula) pair: the root counts as the first segment and
/// every surviving pivot implicant starts a new one. Tasks cut off because a
/// factor reduced to constant 0 are counted in tasks_pruned and never become
/// segments. segments_total, longest_chain and tasks_pruned depend only on
/// the task tree, not on scheduling; the timing fields do not.
struct SolveStats {
    std::uint64_t segments_total = 0;
    std::uint64_t longest_chain = 0;  // max segments on any root-to-leaf path
    std::uint64_t tasks_pruned = 0;
    double wall_seconds = 0.0;
    std::vector<double> segment_seconds;  // per-segment durations, unordered
};

struct SolveResult {
    ImplicantSet implicants;
    SolveStats stats;

    bool sat() const noexcept { return !implicants.terms.empty(); }
};

/// All-solution solve: returns a complete orthogonal implicant set of the
/// product of the factors (empty when unsatisfiable). Independent tasks are
/// executed by a bounded worker pool; the canonical output and the counting
/// stats are identical for any worker count.
SolveResult boolean_solve(const Formula& formula, const SolveConfig& config = {});

/// Cofactors every factor by t, dropping factors that became constant 1.
/// nullopt when some factor became constant 0 (the reduction contradicts t).
std::optional<Formula> reduce_formula(const Formula& formula, const Term& t);

/// Index of the pivot factor under the policy.
/// Throws std::invalid_argument on an empty factor list.
std::size_t choose_pivot(const Formula& formula, PivotPolicy policy);

/// Canonically sorts a collection of terms gathered from independent tasks.
/// Orthogonal inputs cannot contain duplicates; that is asserted in debug
/// builds.
ImplicantSet dedup_and_sort(std::vector<Term> terms);

}  // namespace anfsat
