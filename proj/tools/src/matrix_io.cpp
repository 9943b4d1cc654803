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

#include "infmod/cli/matrix_io.hpp"

#include <cstdio>

#include "infmod/ratmat.hpp"

namespace infmod::cli {

namespace {

std::string pointer(const std::string& base, const std::string& key) { return base + "/" + key; }

Field parse_field(const Json& node, const std::string& where) {
    try {
        if (node.is_string()) return Field::parse_tag(node.get<std::string>());
        if (node.is_object() && node.size() == 1 && node.contains("GF") && node["GF"].is_number_unsigned())
            return Field::prime(node["GF"].get<std::uint32_t>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where, e.what());
    }
    throw ParseError(where, "field must be \"Q\" or {\"GF\": p}");
}

std::size_t parse_dimension(const Json& doc, const char* key, const std::string& origin) {
    const std::string where = pointer(origin, key);
    if (!doc.contains(key)) throw ParseError(where, "missing");
    const Json& v = doc[key];
    if (!v.is_number_unsigned()) throw ParseError(where, "must be a nonnegative integer");
    return v.get<std::size_t>();
}

Scalar parse_coefficient(const Json& node, Field f, const std::string& where) {
    std::string text;
    if (node.is_string())
        text = node.get<std::string>();
    else if (node.is_number_integer())
        text = node.dump();
    else
        throw ParseError(where, "coefficient must be a string \"a\" or \"a/b\" or an integer");
    try {
        return Scalar::parse(text, f);
    } catch (const std::invalid_argument& e) {
        throw ParseError(where, e.what());
    }
}

Poly parse_poly(const Json& node, Field f, const std::string& where) {
    if (!node.is_array()) throw ParseError(where, "coefficient list must be an array");
    std::vector<Scalar> coeffs;
    coeffs.reserve(node.size());
    for (std::size_t k = 0; k < node.size(); ++k) coeffs.push_back(parse_coefficient(node[k], f, pointer(where, std::to_string(k))));
    return Poly(std::move(coeffs));
}

Json poly_to_json(const Poly& p) {
    Json a = Json::array();
    if (p.is_zero()) {
        a.push_back("0");
        return a;
    }
    for (const auto& c : p.coeffs()) a.push_back(c.to_string());
    return a;
}

}  // namespace

ParsedMatrix matrix_from_json(const Json& doc, std::optional<Field> forced, const std::string& origin) {
    if (!doc.is_object()) throw ParseError(origin.empty() ? "/" : origin, "matrix document must be an object");
    Field f = Field::rationals();
    if (doc.contains("field")) f = parse_field(doc["field"], pointer(origin, "field"));
    if (forced) f = *forced;
    const std::size_t rows = parse_dimension(doc, "rows", origin);
    const std::size_t cols = parse_dimension(doc, "cols", origin);
    const std::string ewhere = pointer(origin, "entries");
    if (!doc.contains("entries")) throw ParseError(ewhere, "missing");
    const Json& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError(ewhere, "expected an array of " + std::to_string(rows) + " rows");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string rwhere = pointer(ewhere, std::to_string(i));
        if (!entries[i].is_array() || entries[i].size() != cols)
            throw ParseError(rwhere, "expected an array of " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) {
            const std::string where = pointer(rwhere, std::to_string(j));
            const Json& e = entries[i][j];
            if (!e.is_object() || !e.contains("num") || !e.contains("den"))
                throw ParseError(where, "entry must be {\"num\": [...], \"den\": [...]}");
            Poly num = parse_poly(e["num"], f, pointer(where, "num"));
            Poly den = parse_poly(e["den"], f, pointer(where, "den"));
            if (den.is_zero()) throw ParseError(pointer(where, "den"), "zero denominator");
            m(i, j) = RatFun::normalized(std::move(num), std::move(den)).in(f);
        }
    }
    return {std::move(m), f};
}

ParsedMatrix parse_matrix(std::string_view bytes, std::optional<Field> forced) {
    Json doc;
    try {
        doc = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    return matrix_from_json(doc, forced);
}

Json field_to_json(Field f) {
    if (f.is_rational()) return "Q";
    return Json{{"GF", f.modulus()}};
}

Json matrix_to_json(const RatMatrix& m, Field f) {
    Json doc;
    doc["field"] = field_to_json(f);
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const RatFun e = m(i, j).in(f);
            row.push_back(Json{{"num", poly_to_json(e.num())}, {"den", poly_to_json(e.den())}});
        }
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc;
}

Json matrix_to_json(const PolyMatrix& m, Field f) { return matrix_to_json(to_rational(m), f); }
Json matrix_to_json(const ScalarMatrix& m, Field f) { return matrix_to_json(to_rational(m), f); }

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string emit_matrix(const RatMatrix& m, Field f) { return dump(matrix_to_json(m, f)); }

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace infmod::cli
