#include "cmc/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "cmc/errors.hpp"

namespace cmc {

namespace {

using nlohmann::json;

Rational entry_from_json(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ParseError("matrix entries must be rational strings");
}

}  // namespace

RMatrix parse_matrix_json(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON");
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") ||
      !doc.contains("entries")) {
    throw ParseError("matrix JSON needs keys n, m, entries");
  }
  if (!doc["n"].is_number_unsigned() || !doc["m"].is_number_unsigned()) {
    throw ParseError("matrix JSON sizes must be nonnegative integers");
  }
  std::size_t rows = doc["n"].get<std::size_t>();
  std::size_t cols = doc["m"].get<std::size_t>();
  const json& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != rows) {
    throw ParseError("matrix JSON entries must hold " + std::to_string(rows) + " rows");
  }
  RMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("matrix JSON row " + std::to_string(i + 1) + " must hold " +
                       std::to_string(cols) + " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      a.at(i + 1, j + 1) = entry_from_json(row[j]);
    }
  }
  return a;
}

std::string matrix_to_json(const RMatrix& a) {
  std::ostringstream os;
  os << "{\n  \"n\": " << a.rows() << ",\n  \"m\": " << a.cols() << ",\n  \"entries\": [";
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    os << (i == 1 ? "\n" : ",\n") << "    [";
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (j > 1) os << ", ";
      os << json(a.at(i, j).str()).dump();
    }
    os << "]";
  }
  os << (a.rows() == 0 ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

RMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t width = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
    if (blank) continue;

    std::vector<Rational> row;
    std::size_t cell = 0;
    while (cell <= line.size()) {
      std::size_t comma = line.find(',', cell);
      std::string_view piece = comma == std::string_view::npos
                                   ? line.substr(cell)
                                   : line.substr(cell, comma - cell);
      row.push_back(Rational::parse(piece));
      if (comma == std::string_view::npos) break;
      cell = comma + 1;
    }
    if (rows.empty()) {
      width = row.size();
    } else if (row.size() != width) {
      throw ParseError("CSV row " + std::to_string(rows.size() + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(width));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty CSV matrix");
  RMatrix a(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) a.at(i + 1, j + 1) = std::move(rows[i][j]);
  return a;
}

std::string matrix_to_csv(const RMatrix& a) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (j > 1) os << ',';
      os << a.at(i, j).str();
    }
    os << '\n';
  }
  return os.str();
}

std::string matrix_to_text(const RMatrix& a, MatrixFormat format) {
  return format == MatrixFormat::Json ? matrix_to_json(a) : matrix_to_csv(a);
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  MatrixFormat format;
  std::string ext = path.extension().string();
  if (ext == ".json") {
    format = MatrixFormat::Json;
  } else if (ext == ".csv") {
    format = MatrixFormat::Csv;
  } else {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    format = first != std::string::npos && text[first] == '{' ? MatrixFormat::Json
                                                              : MatrixFormat::Csv;
  }
  return MatrixFile{format, format == MatrixFormat::Json ? parse_matrix_json(text)
                                                         : parse_matrix_csv(text)};
}

}  // namespace cmc
