#pragma once

// JSON input files for the command-line tool.
//
//   group:    {"elements": [...], "mul": [[...]], "op": {"e": "e", ...}}
//   lie:      {"dim": d, "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "1"}}]}
//   operator: [["1", "0"], ["0", "0"]]  or  {"rows": [...]}
//
// Lie indices are 1-based. Rationals are strings "p/q" (plain integers are
// accepted too). A bracket entry (i, j) implies (j, i) with negated
// coefficients unless (j, i) is given explicitly; validation then catches
// any inconsistency.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "freeavg/linearalg.hpp"
#include "freeavg/structures.hpp"

namespace freeavg {

/// Unreadable file or malformed content.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GroupFile {
    GroupTable table;
    std::optional<std::map<std::string, std::string>> op;  // by element name
};

GroupFile parse_group_json(const std::string& text);
GroupFile load_group_file(const std::string& path);

/// Resolves an operator given by element names. Throws InputError unless it
/// is total on the carrier and every name is an element.
OperatorTable resolve_operator(const FiniteGroup& g, const std::map<std::string, std::string>& by_name);

/// The "op" object of an operator file, or the file itself if it has no "op" key.
std::map<std::string, std::string> load_operator_map(const std::string& path);

LieAlgebraSpec parse_lie_json(const std::string& text);
LieAlgebraSpec load_lie_file(const std::string& path);

LinearOperatorMatrix parse_matrix_json(const std::string& text);
LinearOperatorMatrix load_matrix_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace freeavg
