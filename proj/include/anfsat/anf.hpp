#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anfsat {

/// 1-based variable index: x1, x2, ..., xn.
using VarId = int;

/// Raised on malformed textual input. position() is a 0-based byte offset
/// into the string handed to the parser.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised when an operation would exceed a configured exhaustive-work limit.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Product of distinct variables, stored strictly increasing.
/// The empty product is the constant 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<VarId> vars);

    const std::vector<VarId>& vars() const noexcept { return vars_; }
    bool is_constant() const noexcept { return vars_.empty(); }
    std::size_t degree() const noexcept { return vars_.size(); }
    bool contains(VarId v) const;

    bool operator==(const Monomial&) const = default;
    /// Graded lexicographic: lower degree first, then by variable sequence.
    std::strong_ordering operator<=>(const Monomial& other) const;

private:
    std::vector<VarId> vars_;
};

/// Boolean function as an XOR-set of monomials over GF(2).
/// The empty set is the constant 0; {constant monomial} is the constant 1.
/// Monomials are kept unique and graded-lex sorted; constructing with a
/// repeated monomial cancels the pair.
class AnfPoly {
public:
    AnfPoly() = default;  // constant 0 over an empty ambient
    AnfPoly(std::vector<Monomial> monomials, VarId num_vars);

    static AnfPoly zero(VarId num_vars) { return AnfPoly({}, num_vars); }
    static AnfPoly one(VarId num_vars) { return AnfPoly({Monomial{}}, num_vars); }

    const std::vector<Monomial>& monomials() const noexcept { return monos_; }
    VarId num_vars() const noexcept { return num_vars_; }

    bool is_zero() const noexcept { return monos_.empty(); }
    bool is_one() const noexcept { return monos_.size() == 1 && monos_[0].is_constant(); }
    bool is_constant() const noexcept { return is_zero() || is_one(); }

    /// Same monomials under a (possibly larger) ambient variable count.
    AnfPoly with_num_vars(VarId num_vars) const;

    bool operator==(const AnfPoly&) const = default;

private:
    std::vector<Monomial> monos_;
    VarId num_vars_ = 0;
};

/// Values 0/1 for a subset of x1..xn; unmentioned variables are unassigned.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(VarId num_vars);

    /// Total assignment over n <= 64 variables; bit (i-1) of `bits` is xi.
    static Assignment from_bits(std::uint64_t bits, VarId num_vars);

    VarId num_vars() const noexcept { return static_cast<VarId>(vals_.size()); }
    void set(VarId v, bool value);
    /// nullopt when v is unassigned or beyond the ambient range.
    std::optional<bool> get(VarId v) const;

private:
    std::vector<std::int8_t> vals_;  // -1 = unassigned
};

/// Conjunction of literals, i.e. a partial assignment. Stored as signed
/// indices sorted by variable: +v means xv=1, -v means xv=0. A variable
/// appears at most once. The empty term is the tautology (constant 1).
class Term {
public:
    Term() = default;
    static Term from_literals(std::vector<int> literals);

    const std::vector<int>& literals() const noexcept { return lits_; }
    bool is_tautology() const noexcept { return lits_.empty(); }
    std::size_t size() const noexcept { return lits_.size(); }

    /// Binding of v, or nullopt when v is free.
    std::optional<bool> value_of(VarId v) const;
    std::size_t positive_count() const;
    std::vector<VarId> bound_vars() const;

    /// True iff every bound variable matches `a`. Throws std::invalid_argument
    /// when a bound variable is unassigned in `a`.
    bool evaluates_true(const Assignment& a) const;

    bool operator==(const Term&) const = default;
    /// Canonical order: lexicographic over (variable, value) pairs, with a
    /// complemented literal before the positive one. This is the order result
    /// sets are emitted in.
    std::strong_ordering operator<=>(const Term& other) const;

private:
    std::vector<int> lits_;
};

/// Consistent union of two partial assignments; nullopt when the operands
/// bind some variable to opposite values (the contradiction product).
std::optional<Term> term_product(const Term& a, const Term& b);

/// GF(2) evaluation: XOR over monomials of the AND of their variables.
/// Throws std::invalid_argument when a support variable is unassigned.
bool evaluate(const AnfPoly& f, const Assignment& a);

/// Variables occurring in at least one monomial, ascending.
std::vector<VarId> support(const AnfPoly& f);

/// The ratio f/t: substitutes every binding of t into f. Bindings of
/// variables absent from f are ignored. For every total assignment a of the
/// remaining variables, cofactor(f,t)(a) == f(a together with t).
AnfPoly cofactor(const AnfPoly& f, const Term& t);

/// Orthonormal set over ordered variables v1..vk: the k+1 terms
///   v1;  v1'v2;  v1'v2'v3;  ...;  v1'...v(k-1)'vk;  v1'...vk'
/// emitted in exactly that order. Pairwise products are contradictions and
/// every total assignment of v1..vk satisfies exactly one term.
/// Throws std::invalid_argument on an empty or duplicated variable list.
std::vector<Term> on_set(const std::vector<VarId>& vars);

/// Finds two terms whose product is NOT a contradiction, or nullopt when the
/// set is pairwise orthogonal. Indices refer to `terms`.
std::optional<std::pair<std::size_t, std::size_t>>
find_nonorthogonal_pair(const std::vector<Term>& terms);

// Text grammar. A polynomial is an array of arrays: "[[1],[2],[2,3]]", with
// the constant term written as a bare 1 or an empty subarray and emitted as 1:
// "[1,[1],[3]]". "[]" is the constant 0. A term is a signed tuple sorted by
// variable on output: "(1,2,-3,4)"; "()" is the tautology. Whitespace is
// tolerated between tokens.

/// Parses the array-of-arrays syntax. The ambient variable count is the
/// largest index mentioned (0 for constants).
AnfPoly parse_anf(std::string_view text);
/// Same, with an explicit ambient count; indices above it are rejected.
AnfPoly parse_anf(std::string_view text, VarId num_vars);
std::string serialize_anf(const AnfPoly& f);

Term parse_term(std::string_view text);
std::string serialize_term(const Term& t);

}  // namespace anfsat
