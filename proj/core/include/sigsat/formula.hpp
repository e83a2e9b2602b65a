#ifndef SIGSAT_FORMULA_HPP
#define SIGSAT_FORMULA_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sigsat {

/// Signed counter for literal totals and true-literal counts.
using Count = std::int64_t;

/// One signed occurrence of a variable. Variables are 1-based, as in DIMACS.
struct Literal {
    int variable = 0;
    bool positive = true;

    static Literal from_dimacs(int code) {
        return Literal{code < 0 ? -code : code, code > 0};
    }
    int to_dimacs() const { return positive ? variable : -variable; }

    bool operator==(const Literal&) const = default;
};

/// A clause is an ordered literal sequence. Invariant (enforced at parse /
/// validation time): no two literals share a variable, so a clause has
/// neither repeated nor tautological a/not-a pairs. May be empty.
using Clause = std::vector<Literal>;

/// A CNF formula over variables 1..num_variables.
struct Formula {
    int num_variables = 0;
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }

    /// Total literal occurrence count N.
    Count num_literals() const {
        Count n = 0;
        for (const auto& c : clauses) n += static_cast<Count>(c.size());
        return n;
    }

    int max_clause_width() const {
        std::size_t w = 0;
        for (const auto& c : clauses)
            if (c.size() > w) w = c.size();
        return static_cast<int>(w);
    }

    bool operator==(const Formula&) const = default;
};

/// Checks the Formula invariants: every variable in 1..n and no clause
/// mentioning a variable twice. Throws ValidationError with the offending
/// clause index (1-based) otherwise.
void validate_formula(const Formula& f);

/// Truth assignment, one 0/1 value per variable; values[s-1] holds variable s.
using Assignment = std::vector<std::uint8_t>;

/// "0100..1" rendering of an assignment, variable 1 first.
std::string assignment_to_string(const Assignment& y);
Assignment assignment_from_string(const std::string& bits);

/// Per-variable positive/negative occurrence counts.
struct VariableOccurrence {
    Count pos = 0; // positive occurrences
    Count neg = 0; // negated occurrences

    Count total() const { return pos + neg; }
    Count imbalance() const { return pos >= neg ? pos - neg : neg - pos; }
    /// +1 when positive occurrences dominate, -1 when negated ones do, 0 on a tie.
    int majority_sign() const { return pos > neg ? 1 : (pos < neg ? -1 : 0); }

    bool operator==(const VariableOccurrence&) const = default;
};

/// Occurrence counts for every variable of a formula. vars[s-1] is variable s;
/// variables that never occur keep (0, 0).
struct OccurrenceProfile {
    std::vector<VariableOccurrence> vars;
    Count total_literals = 0; // N

    int num_variables() const { return static_cast<int>(vars.size()); }
};

OccurrenceProfile occurrence_profile(const Formula& f);

/// Number of true literal occurrences under y:
/// sum over variables of pos*y_s + neg*(1-y_s).
/// Throws ValidationError when the assignment length does not match.
Count sigma(const OccurrenceProfile& profile, const Assignment& y);

/// Per-clause true-literal histogram (mu'_0 .. mu'_K), K = max clause width.
/// Entry alpha counts clauses with exactly alpha true literals. Empty formula
/// yields an empty histogram.
std::vector<Count> clause_true_counts(const Formula& f, const Assignment& y);

/// Number of true literals in a single clause under y.
Count clause_true_count(const Clause& c, const Assignment& y);

} // namespace sigsat

#endif
