#ifndef SIGSAT_DIMACS_HPP
#define SIGSAT_DIMACS_HPP

#include "sigsat/formula.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sigsat {

/// Parses DIMACS CNF: "c" comment lines, one "p cnf <n> <m>" header, then
/// zero-terminated clauses of nonzero integers with |v| <= n. The clause
/// count must equal the declared m. Throws ParseError naming the offending
/// clause for range violations and duplicate/tautological variables.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(const std::string& text);
Formula parse_dimacs_file(const std::string& path);

/// Writes DIMACS, one clause per line, literals separated by single spaces and
/// terminated by 0. Each comment string becomes one "c " line above the header.
void write_dimacs(const Formula& f, std::ostream& out,
                  const std::vector<std::string>& comments = {});
std::string to_dimacs(const Formula& f, const std::vector<std::string>& comments = {});

} // namespace sigsat

#endif
