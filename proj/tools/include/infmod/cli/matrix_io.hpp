/*
   Copyright 2026 The infmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// MatrixFile documents: exact JSON serialization of rational matrices.
//
//     {"field": "Q" | {"GF": p}, "rows": r, "cols": c,
//      "entries": [[{"num": ["a", "b/c", ...], "den": [...]}, ...], ...]}
//
// Coefficients are ascending decimal strings; numbers are accepted on input.

#ifndef INFMOD_CLI_MATRIX_IO_HPP
#define INFMOD_CLI_MATRIX_IO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "infmod/matrix.hpp"

namespace infmod::cli {

using Json = nlohmann::ordered_json;

/// Malformed input document. `where` is a JSON pointer or a byte offset.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& where, const std::string& what) : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const noexcept { return where_; }

   private:
    std::string where_;
};

struct ParsedMatrix {
    RatMatrix matrix;
    Field field;
};

/// Parses a MatrixFile. With `forced`, coefficients are read in that field
/// and the declared field is ignored. Throws ParseError.
ParsedMatrix parse_matrix(std::string_view bytes, std::optional<Field> forced = std::nullopt);
ParsedMatrix matrix_from_json(const Json& doc, std::optional<Field> forced = std::nullopt, const std::string& origin = "");

Json field_to_json(Field f);
Json matrix_to_json(const RatMatrix& m, Field f);
Json matrix_to_json(const PolyMatrix& m, Field f);
Json matrix_to_json(const ScalarMatrix& m, Field f);

/// Canonical bytes: two-space indentation and a trailing newline.
std::string dump(const Json& doc);
std::string emit_matrix(const RatMatrix& m, Field f);

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace infmod::cli

#endif  // INFMOD_CLI_MATRIX_IO_HPP
