#include "sigsat/dimacs.hpp"

#include "sigsat/errors.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sigsat {

namespace {

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (std::size_t k = i; k < tok.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(tok[k]))) return false;
    try {
        out = std::stoll(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

void push_literal(Clause& clause, int code, int n, std::size_t clause_index) {
    Literal lit = Literal::from_dimacs(code);
    if (lit.variable > n)
        throw ParseError("literal " + std::to_string(code) + " out of range in clause " +
                         std::to_string(clause_index));
    for (const Literal& prev : clause) {
        if (prev.variable == lit.variable) {
            const char* kind =
                prev.positive == lit.positive ? "duplicate literal" : "tautological pair";
            throw ParseError(std::string(kind) + " for variable " +
                             std::to_string(lit.variable) + " in clause " +
                             std::to_string(clause_index));
        }
    }
    clause.push_back(lit);
}

} // namespace

Formula parse_dimacs(std::istream& in) {
    Formula f;
    bool seen_header = false;
    long long declared_clauses = 0;
    Clause current;
    bool clause_open = false;

    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == 'c') continue;
        if (line[start] == 'p') {
            if (seen_header) throw ParseError("duplicate \"p cnf\" header");
            std::istringstream hs(line.substr(start));
            std::string p, fmt;
            long long n = -1, m = -1;
            hs >> p >> fmt >> n >> m;
            std::string rest;
            if (!(p == "p" && fmt == "cnf" && n >= 0 && m >= 0 && !hs.fail()) || (hs >> rest))
                throw ParseError("malformed header: \"" + line + "\"");
            f.num_variables = static_cast<int>(n);
            declared_clauses = m;
            seen_header = true;
            continue;
        }
        if (!seen_header)
            throw ParseError("clause data before \"p cnf\" header");
        std::istringstream ls(line.substr(start));
        std::string tok;
        while (ls >> tok) {
            long long v;
            if (!parse_int(tok, v))
                throw ParseError("invalid token \"" + tok + "\"");
            if (v == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
                clause_open = false;
                continue;
            }
            if (v < -f.num_variables || v > f.num_variables)
                throw ParseError("literal " + std::to_string(v) + " out of range in clause " +
                                 std::to_string(f.clauses.size() + 1));
            clause_open = true;
            push_literal(current, static_cast<int>(v), f.num_variables, f.clauses.size() + 1);
        }
    }

    if (!seen_header) throw ParseError("missing \"p cnf\" header");
    if (clause_open)
        throw ParseError("unterminated clause " + std::to_string(f.clauses.size() + 1));
    if (static_cast<long long>(f.clauses.size()) != declared_clauses)
        throw ParseError("clause count mismatch: header declares " +
                         std::to_string(declared_clauses) + ", found " +
                         std::to_string(f.clauses.size()));
    return f;
}

Formula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

Formula parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_dimacs(in);
}

void write_dimacs(const Formula& f, std::ostream& out,
                  const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p cnf " << f.num_variables << " " << f.clauses.size() << "\n";
    for (const auto& clause : f.clauses) {
        for (const auto& lit : clause) out << lit.to_dimacs() << " ";
        out << "0\n";
    }
}

std::string to_dimacs(const Formula& f, const std::vector<std::string>& comments) {
    std::ostringstream out;
    write_dimacs(f, out, comments);
    return out.str();
}

} // namespace sigsat
