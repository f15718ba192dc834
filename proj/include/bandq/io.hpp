#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bandq/matrix.hpp"

namespace bandq {

enum class MatrixFormat { Json, Plain, Auto };

MatrixFormat parse_format_name(std::string_view name);

/// Parses the plain (whitespace rows) or JSON ({"n", "rows"}) matrix format
/// into exact rationals. JSON decimals are read from their source text, never
/// through a double. Throws Error(ParseError / NonSquare / ZeroDenominator).
RationalMatrix parse_matrix(std::string_view text, MatrixFormat format);

RationalMatrix read_matrix_file(const std::string& path, MatrixFormat format);

std::string format_plain(const RationalMatrix& a);
nlohmann::json matrix_to_json(const RationalMatrix& a);
nlohmann::json vector_to_json(const RationalVector& v);

}  // namespace bandq
