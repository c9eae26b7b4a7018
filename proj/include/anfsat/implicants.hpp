#pragma once

#include <string>
#include <vector>

#include "anfsat/anf.hpp"

namespace anfsat {

/// Variable ordering used when expanding over an orthonormal term set.
enum class VarOrder {
    Index,      // ascending variable index
    Frequency,  // most frequent variable of the function first, ties by index
};

/// A pairwise-orthogonal set of terms covering exactly the solutions of some
/// source function: every member t has cofactor(f,t)=1, pairwise products are
/// contradictions, and the disjunction of the members equals f pointwise.
struct ImplicantSet {
    std::vector<Term> terms;          // canonically sorted
    std::vector<VarId> ambient_vars;  // support the set was computed over
};

/// Complete orthogonal implicant set of f. Constant 0 yields the empty set;
/// constant 1 yields {tautology}. Otherwise each term t of the orthonormal
/// set over f's (ordered) support is resolved through q = f/t: q=0 skips t,
/// q=1 emits t, anything else recurses on q and emits t*s for every implicant
/// s of q. Deterministic for a fixed ordering policy.
ImplicantSet generate_implicants(const AnfPoly& f, VarOrder order = VarOrder::Index);

struct VerifyReport {
    bool ok = false;
    /// False when |support| exceeded the exhaustive limit and the
    /// completeness invariant could not be checked (partial verdict).
    bool completeness_checked = false;
    /// Names the first violated invariant with a witness, empty when ok.
    std::string detail;
};

/// Checks the three set invariants against f: implicant property per term,
/// pairwise orthogonality, and (up to `exhaustive_limit` support variables)
/// pointwise completeness against exhaustive evaluation.
VerifyReport verify_implicant_set(const AnfPoly& f, const ImplicantSet& implicants,
                                  VarId exhaustive_limit = 20);

}  // namespace anfsat
