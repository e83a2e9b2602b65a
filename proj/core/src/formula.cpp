#include "sigsat/formula.hpp"

#include "sigsat/errors.hpp"

#include <algorithm>
#include <string>

namespace sigsat {

void validate_formula(const Formula& f) {
    if (f.num_variables < 0)
        throw ValidationError("formula declares a negative variable count");
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const Clause& c = f.clauses[j];
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Literal& lit = c[i];
            if (lit.variable < 1 || lit.variable > f.num_variables)
                throw ValidationError("variable " + std::to_string(lit.variable) +
                                      " out of range in clause " + std::to_string(j + 1));
            for (std::size_t k = 0; k < i; ++k) {
                if (c[k].variable == lit.variable) {
                    const char* kind = c[k].positive == lit.positive
                                           ? "duplicate literal"
                                           : "tautological pair";
                    throw ValidationError(std::string(kind) + " for variable " +
                                          std::to_string(lit.variable) + " in clause " +
                                          std::to_string(j + 1));
                }
            }
        }
    }
}

std::string assignment_to_string(const Assignment& y) {
    std::string s;
    s.reserve(y.size());
    for (auto v : y) s.push_back(v ? '1' : '0');
    return s;
}

Assignment assignment_from_string(const std::string& bits) {
    Assignment y;
    y.reserve(bits.size());
    for (char ch : bits) {
        if (ch != '0' && ch != '1')
            throw ValidationError("assignment string must contain only 0/1");
        y.push_back(ch == '1' ? 1 : 0);
    }
    return y;
}

OccurrenceProfile occurrence_profile(const Formula& f) {
    OccurrenceProfile p;
    p.vars.assign(static_cast<std::size_t>(f.num_variables), VariableOccurrence{});
    for (const auto& clause : f.clauses) {
        for (const auto& lit : clause) {
            auto& v = p.vars[static_cast<std::size_t>(lit.variable - 1)];
            (lit.positive ? v.pos : v.neg) += 1;
        }
    }
    p.total_literals = f.num_literals();
    return p;
}

Count sigma(const OccurrenceProfile& profile, const Assignment& y) {
    if (y.size() != profile.vars.size())
        throw ValidationError("assignment length " + std::to_string(y.size()) +
                              " does not match variable count " +
                              std::to_string(profile.vars.size()));
    Count s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const auto& v = profile.vars[i];
        s += y[i] ? v.pos : v.neg;
    }
    return s;
}

Count clause_true_count(const Clause& c, const Assignment& y) {
    Count t = 0;
    for (const auto& lit : c) {
        const bool value = y[static_cast<std::size_t>(lit.variable - 1)] != 0;
        if (value == lit.positive) ++t;
    }
    return t;
}

std::vector<Count> clause_true_counts(const Formula& f, const Assignment& y) {
    if (static_cast<int>(y.size()) != f.num_variables)
        throw ValidationError("assignment length " + std::to_string(y.size()) +
                              " does not match variable count " +
                              std::to_string(f.num_variables));
    if (f.clauses.empty()) return {};
    std::vector<Count> hist(static_cast<std::size_t>(f.max_clause_width()) + 1, 0);
    for (const auto& c : f.clauses)
        hist[static_cast<std::size_t>(clause_true_count(c, y))] += 1;
    return hist;
}

} // namespace sigsat
