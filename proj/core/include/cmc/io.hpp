#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cmc/matrix.hpp"

namespace cmc {

enum class MatrixFormat { Json, Csv };

struct MatrixFile {
  MatrixFormat format = MatrixFormat::Json;
  RMatrix matrix;
};

// JSON object {"n": rows, "m": cols, "entries": [[..], ..]} whose entries
// are rational literals ("3", "-7/2"); plain JSON integers are accepted on
// input. Serialization always writes string entries, one row per line, so
// parse -> serialize -> parse is the identity.
RMatrix parse_matrix_json(std::string_view text);
std::string matrix_to_json(const RMatrix& a);

// Headerless CSV: one row per line, entries comma-separated rational
// literals. All rows must have equal width.
RMatrix parse_matrix_csv(std::string_view text);
std::string matrix_to_csv(const RMatrix& a);

std::string matrix_to_text(const RMatrix& a, MatrixFormat format);

// Reads a matrix file, picking the format from the extension (.json/.csv)
// and falling back to sniffing for a leading '{'. ParseError on malformed
// content or an unreadable path.
MatrixFile load_matrix_file(const std::filesystem::path& path);

}  // namespace cmc
