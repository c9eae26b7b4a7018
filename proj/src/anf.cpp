#include "anfsat/anf.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace anfsat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond)
        throw std::invalid_argument(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<VarId> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        require(vars_[i] >= 1, "monomial variable index must be >= 1");
        require(i == 0 || vars_[i] != vars_[i - 1], "duplicate variable in monomial");
    }
}

bool Monomial::contains(VarId v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto cmp = vars_.size() <=> other.vars_.size(); cmp != 0)
        return cmp;
    return std::lexicographical_compare_three_way(vars_.begin(), vars_.end(),
                                                  other.vars_.begin(), other.vars_.end());
}

// ---------------------------------------------------------------------------
// AnfPoly

AnfPoly::AnfPoly(std::vector<Monomial> monomials, VarId num_vars)
    : monos_(std::move(monomials)), num_vars_(num_vars) {
    require(num_vars_ >= 0, "num_vars must be nonnegative");
    std::sort(monos_.begin(), monos_.end());
    // XOR semantics: an even run of equal monomials cancels, an odd run keeps one.
    std::vector<Monomial> kept;
    kept.reserve(monos_.size());
    for (std::size_t i = 0; i < monos_.size();) {
        std::size_t j = i;
        while (j < monos_.size() && monos_[j] == monos_[i])
            ++j;
        if ((j - i) % 2 == 1)
            kept.push_back(std::move(monos_[i]));
        i = j;
    }
    monos_ = std::move(kept);
    for (const Monomial& m : monos_)
        if (!m.vars().empty())
            require(m.vars().back() <= num_vars_, "monomial variable exceeds num_vars");
}

AnfPoly AnfPoly::with_num_vars(VarId num_vars) const {
    return AnfPoly(monos_, num_vars);
}

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(VarId num_vars) {
    require(num_vars >= 0, "num_vars must be nonnegative");
    vals_.assign(static_cast<std::size_t>(num_vars), -1);
}

Assignment Assignment::from_bits(std::uint64_t bits, VarId num_vars) {
    require(num_vars >= 0 && num_vars <= 64, "from_bits supports at most 64 variables");
    Assignment a(num_vars);
    for (VarId v = 1; v <= num_vars; ++v)
        a.set(v, (bits >> (v - 1)) & 1u);
    return a;
}

void Assignment::set(VarId v, bool value) {
    require(v >= 1 && v <= num_vars(), "variable index out of range");
    vals_[static_cast<std::size_t>(v - 1)] = value ? 1 : 0;
}

std::optional<bool> Assignment::get(VarId v) const {
    if (v < 1)
        throw std::invalid_argument("variable index must be >= 1");
    if (v > num_vars() || vals_[static_cast<std::size_t>(v - 1)] < 0)
        return std::nullopt;
    return vals_[static_cast<std::size_t>(v - 1)] == 1;
}

// ---------------------------------------------------------------------------
// Term

Term Term::from_literals(std::vector<int> literals) {
    std::sort(literals.begin(), literals.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    for (std::size_t i = 0; i < literals.size(); ++i) {
        require(literals[i] != 0, "literal 0 is not a variable");
        require(i == 0 || std::abs(literals[i]) != std::abs(literals[i - 1]),
                "variable repeated in term");
    }
    Term t;
    t.lits_ = std::move(literals);
    return t;
}

std::optional<bool> Term::value_of(VarId v) const {
    auto it = std::lower_bound(lits_.begin(), lits_.end(), v,
                               [](int lit, VarId var) { return std::abs(lit) < var; });
    if (it == lits_.end() || std::abs(*it) != v)
        return std::nullopt;
    return *it > 0;
}

std::size_t Term::positive_count() const {
    return static_cast<std::size_t>(std::count_if(lits_.begin(), lits_.end(),
                                                  [](int lit) { return lit > 0; }));
}

std::vector<VarId> Term::bound_vars() const {
    std::vector<VarId> vars;
    vars.reserve(lits_.size());
    for (int lit : lits_)
        vars.push_back(std::abs(lit));
    return vars;
}

bool Term::evaluates_true(const Assignment& a) const {
    for (int lit : lits_) {
        auto val = a.get(std::abs(lit));
        if (!val)
            throw std::invalid_argument("term variable x" + std::to_string(std::abs(lit)) +
                                        " is unassigned");
        if (*val != (lit > 0))
            return false;
    }
    return true;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
    auto key = [](int lit) { return std::pair<int, int>(std::abs(lit), lit > 0 ? 1 : 0); };
    return std::lexicographical_compare_three_way(
        lits_.begin(), lits_.end(), other.lits_.begin(), other.lits_.end(),
        [&](int a, int b) { return key(a) <=> key(b); });
}

std::optional<Term> term_product(const Term& a, const Term& b) {
    std::vector<int> merged;
    merged.reserve(a.literals().size() + b.literals().size());
    auto ia = a.literals().begin(), ea = a.literals().end();
    auto ib = b.literals().begin(), eb = b.literals().end();
    while (ia != ea && ib != eb) {
        int va = std::abs(*ia), vb = std::abs(*ib);
        if (va < vb) {
            merged.push_back(*ia++);
        } else if (vb < va) {
            merged.push_back(*ib++);
        } else {
            if (*ia != *ib)
                return std::nullopt;  // opposite values: contradiction
            merged.push_back(*ia);
            ++ia;
            ++ib;
        }
    }
    merged.insert(merged.end(), ia, ea);
    merged.insert(merged.end(), ib, eb);
    return Term::from_literals(std::move(merged));
}

// ---------------------------------------------------------------------------
// Operations

bool evaluate(const AnfPoly& f, const Assignment& a) {
    bool acc = false;
    for (const Monomial& m : f.monomials()) {
        bool prod = true;
        for (VarId v : m.vars()) {
            auto val = a.get(v);
            if (!val)
                throw std::invalid_argument("support variable x" + std::to_string(v) +
                                            " is unassigned");
            prod = prod && *val;
        }
        acc ^= prod;
    }
    return acc;
}

std::vector<VarId> support(const AnfPoly& f) {
    std::vector<VarId> vars;
    for (const Monomial& m : f.monomials())
        vars.insert(vars.end(), m.vars().begin(), m.vars().end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

AnfPoly cofactor(const AnfPoly& f, const Term& t) {
    std::vector<Monomial> out;
    out.reserve(f.monomials().size());
    for (const Monomial& m : f.monomials()) {
        std::vector<VarId> kept;
        kept.reserve(m.vars().size());
        bool killed = false;
        for (VarId v : m.vars()) {
            auto bound = t.value_of(v);
            if (!bound) {
                kept.push_back(v);
            } else if (!*bound) {
                killed = true;  // v=0 zeroes the whole monomial
                break;
            }
            // v=1 just drops the variable
        }
        if (!killed)
            out.push_back(Monomial(std::move(kept)));
    }
    return AnfPoly(std::move(out), f.num_vars());
}

std::vector<Term> on_set(const std::vector<VarId>& vars) {
    require(!vars.empty(), "on_set needs at least one variable");
    {
        std::vector<VarId> sorted = vars;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "on_set variables must be distinct");
    }
    std::vector<Term> terms;
    terms.reserve(vars.size() + 1);
    std::vector<int> prefix;  // complemented v1..vi
    for (std::size_t i = 0; i < vars.size(); ++i) {
        std::vector<int> lits = prefix;
        lits.push_back(vars[i]);
        terms.push_back(Term::from_literals(std::move(lits)));
        prefix.push_back(-vars[i]);
    }
    terms.push_back(Term::from_literals(std::move(prefix)));
    return terms;
}

namespace {

// Recursive split: terms that agree (or are free) on every variable end up in
// a common leaf; two of them surviving past the last variable are compatible.
std::optional<std::pair<std::size_t, std::size_t>>
split_by_var(const std::vector<Term>& terms, const std::vector<std::size_t>& idx,
             const std::vector<VarId>& vars, std::size_t vi) {
    if (idx.size() <= 1)
        return std::nullopt;
    for (; vi < vars.size(); ++vi) {
        std::vector<std::size_t> zeros, ones, frees;
        for (std::size_t i : idx) {
            auto val = terms[i].value_of(vars[vi]);
            if (!val)
                frees.push_back(i);
            else if (*val)
                ones.push_back(i);
            else
                zeros.push_back(i);
        }
        if (zeros.empty() && ones.empty())
            continue;  // variable unused by this cluster
        if (zeros.empty() || ones.empty())
            continue;  // no separation possible here; all stay together
        zeros.insert(zeros.end(), frees.begin(), frees.end());
        ones.insert(ones.end(), frees.begin(), frees.end());
        if (auto hit = split_by_var(terms, zeros, vars, vi + 1))
            return hit;
        return split_by_var(terms, ones, vars, vi + 1);
    }
    return std::make_pair(idx[0], idx[1]);
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>>
find_nonorthogonal_pair(const std::vector<Term>& terms) {
    std::vector<VarId> vars;
    for (const Term& t : terms)
        for (int lit : t.literals())
            vars.push_back(std::abs(lit));
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::vector<std::size_t> idx(terms.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    return split_by_var(terms, idx, vars, 0);
}

// ---------------------------------------------------------------------------
// Text grammar

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        return text_[pos_];
    }
    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool consume(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long parse_int(bool allow_sign) {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 100'000'000)
                fail_at("variable index too large", start);
            ++pos_;
        }
        return neg ? -value : value;
    }
    std::size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, at);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Monomial parse_monomial(Cursor& cur) {
    if (cur.consume('1'))
        return Monomial{};  // bare 1: the constant term
    cur.expect('[');
    std::vector<VarId> vars;
    if (!cur.consume(']')) {
        do {
            std::size_t at = cur.pos();
            long v = cur.parse_int(/*allow_sign=*/false);
            if (v < 1)
                cur.fail_at("variable index must be >= 1", at);
            if (std::find(vars.begin(), vars.end(), static_cast<VarId>(v)) != vars.end())
                cur.fail_at("duplicate variable in monomial", at);
            vars.push_back(static_cast<VarId>(v));
        } while (cur.consume(','));
        cur.expect(']');
    }
    return Monomial(std::move(vars));
}

}  // namespace

AnfPoly parse_anf(std::string_view text) {
    Cursor cur(text);
    cur.expect('[');
    std::vector<Monomial> monos;
    if (!cur.consume(']')) {
        do {
            monos.push_back(parse_monomial(cur));
        } while (cur.consume(','));
        cur.expect(']');
    }
    if (!cur.at_end())
        cur.fail("trailing characters after polynomial");
    VarId max_var = 0;
    for (const Monomial& m : monos)
        if (!m.vars().empty())
            max_var = std::max(max_var, m.vars().back());
    return AnfPoly(std::move(monos), max_var);
}

AnfPoly parse_anf(std::string_view text, VarId num_vars) {
    AnfPoly f = parse_anf(text);
    if (f.num_vars() > num_vars)
        throw ParseError("variable index exceeds num_vars=" + std::to_string(num_vars), 0);
    return f.with_num_vars(num_vars);
}

std::string serialize_anf(const AnfPoly& f) {
    std::string out = "[";
    bool first = true;
    for (const Monomial& m : f.monomials()) {
        if (!first)
            out += ',';
        first = false;
        if (m.is_constant()) {
            out += '1';
        } else {
            out += '[';
            for (std::size_t i = 0; i < m.vars().size(); ++i) {
                if (i)
                    out += ',';
                out += std::to_string(m.vars()[i]);
            }
            out += ']';
        }
    }
    out += ']';
    return out;
}

Term parse_term(std::string_view text) {
    Cursor cur(text);
    cur.expect('(');
    std::vector<int> lits;
    if (!cur.consume(')')) {
        do {
            std::size_t at = cur.pos();
            long lit = cur.parse_int(/*allow_sign=*/true);
            if (lit == 0)
                cur.fail_at("literal 0 is not a variable", at);
            for (int seen : lits)
                if (std::abs(seen) == std::abs(static_cast<int>(lit)))
                    cur.fail_at("variable repeated in term", at);
            lits.push_back(static_cast<int>(lit));
        } while (cur.consume(','));
        cur.expect(')');
    }
    if (!cur.at_end())
        cur.fail("trailing characters after term");
    return Term::from_literals(std::move(lits));
}

std::string serialize_term(const Term& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.literals().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(t.literals()[i]);
    }
    out += ')';
    return out;
}

}  // namespace anfsat
