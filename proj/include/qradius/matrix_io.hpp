#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qradius/matrix.hpp"

namespace qradius {

/// On-disk matrix: {"name": "...", "n": N, "entries": [[re, im], ...]} with
/// N*N entries in row-major order. "name" is optional.
struct MatrixFile {
    std::string name;
    Matrix matrix;
};

/// Throws ParseError (with line/column or offending field) or ShapeError.
MatrixFile parse_matrix_file(std::string_view json_text);
Matrix parse_matrix(std::string_view json_text);

/// Serialized doubles round-trip bit-exactly through parse_matrix_file.
std::string serialize_matrix(const MatrixFile& file);

MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file);

}  // namespace qradius
