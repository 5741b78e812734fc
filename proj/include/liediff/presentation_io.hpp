#pragma once

#include "liediff/frobenius.hpp"

#include <filesystem>
#include <string_view>

namespace liediff {

// Presentation JSON:
//   { "vars": ["x","y"],
//     "derivations": [ {"name":"D1","action":{"x":"1","y":"0"}}, ... ],
//     "alpha": [ {"k":1,"l":2,"m":1,"value":"1"} ] }
// Omitted alpha entries are 0; (l,k,m) is filled from (k,l,m) by
// antisymmetry. With `validate`, check_presentation must pass or
// PresentationInvalid is thrown. Other errors: SchemaError.
Presentation parse_presentation_json(std::string_view text, bool validate = true);
Presentation load_presentation(const std::filesystem::path& path, bool validate = true);

// { "n": 2, "entries": [["1","0"],["-x","1"]] }, entries parsed over p's variables.
BasisMatrix parse_basis_matrix_json(std::string_view text, const Presentation& p);
BasisMatrix load_basis_matrix(const std::filesystem::path& path, const Presentation& p);

// { "beta": [ {"k":1,"l":2,"m":1,"value":"1"} ] } with the same fill rules as alpha.
StructureConstants parse_structure_constants_json(std::string_view text, const Presentation& p);
StructureConstants load_structure_constants(const std::filesystem::path& path, const Presentation& p);

} // namespace liediff
