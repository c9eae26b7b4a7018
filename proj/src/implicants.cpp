#include "anfsat/implicants.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace anfsat {

namespace {

std::vector<VarId> ordered_support(const AnfPoly& f, VarOrder order) {
    std::vector<VarId> vars = support(f);
    if (order == VarOrder::Frequency) {
        std::map<VarId, std::size_t> freq;
        for (const Monomial& m : f.monomials())
            for (VarId v : m.vars())
                ++freq[v];
        std::stable_sort(vars.begin(), vars.end(), [&](VarId a, VarId b) {
            if (freq[a] != freq[b])
                return freq[a] > freq[b];
            return a < b;
        });
    }
    return vars;
}

void generate_into(const AnfPoly& f, VarOrder order, const Term& prefix,
                   std::vector<Term>& out) {
    if (f.is_zero())
        return;
    if (f.is_one()) {
        out.push_back(prefix);
        return;
    }
    for (const Term& t : on_set(ordered_support(f, order))) {
        AnfPoly q = cofactor(f, t);
        if (q.is_zero())
            continue;  // t is not an implicant
        auto extended = term_product(prefix, t);
        assert(extended && "ON term binds variables already fixed by the prefix");
        if (q.is_one())
            out.push_back(*extended);
        else
            generate_into(q, order, *extended, out);  // support strictly shrinks
    }
}

}  // namespace

ImplicantSet generate_implicants(const AnfPoly& f, VarOrder order) {
    ImplicantSet result;
    result.ambient_vars = support(f);
    generate_into(f, order, Term{}, result.terms);
    std::sort(result.terms.begin(), result.terms.end());
    return result;
}

VerifyReport verify_implicant_set(const AnfPoly& f, const ImplicantSet& implicants,
                                  VarId exhaustive_limit) {
    VerifyReport report;

    for (const Term& t : implicants.terms) {
        if (!cofactor(f, t).is_one()) {
            report.detail = "implicant property violated: cofactor(f," + serialize_term(t) +
                            ") != 1";
            return report;
        }
    }

    if (auto pair = find_nonorthogonal_pair(implicants.terms)) {
        report.detail = "orthogonality violated: " +
                        serialize_term(implicants.terms[pair->first]) + " and " +
                        serialize_term(implicants.terms[pair->second]) +
                        " have a consistent product";
        return report;
    }

    // Completeness: the disjunction of terms must agree with f on every
    // assignment of the variables involved.
    std::vector<VarId> vars = support(f);
    for (const Term& t : implicants.terms)
        for (VarId v : t.bound_vars())
            vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    if (static_cast<VarId>(vars.size()) > exhaustive_limit) {
        report.ok = true;  // partial verdict
        report.detail = "completeness not checked: " + std::to_string(vars.size()) +
                        " variables exceed the exhaustive limit of " +
                        std::to_string(exhaustive_limit);
        return report;
    }

    VarId max_var = vars.empty() ? 0 : vars.back();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits) {
        Assignment a(max_var);
        for (std::size_t i = 0; i < vars.size(); ++i)
            a.set(vars[i], (bits >> i) & 1u);
        bool by_f = evaluate(f, a);
        bool by_terms = false;
        for (const Term& t : implicants.terms)
            by_terms = by_terms || t.evaluates_true(a);
        if (by_f != by_terms) {
            std::string assig;
            for (std::size_t i = 0; i < vars.size(); ++i)
                assig += " x" + std::to_string(vars[i]) + "=" + ((bits >> i) & 1u ? "1" : "0");
            report.detail = std::string("completeness violated at") + assig + ": f=" +
                            (by_f ? "1" : "0") + " but term disjunction=" +
                            (by_terms ? "1" : "0");
            return report;
        }
    }

    report.ok = true;
    report.completeness_checked = true;
    return report;
}

}  // namespace anfsat
