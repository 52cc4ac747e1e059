#include "qradius/matrix_io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace qradius {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw Error(ErrorKind::ParseError, "field '" + field + "': " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    const auto head = text.substr(0, byte);
    const auto line = std::count(head.begin(), head.end(), '\n') + 1;
    const auto last_nl = head.rfind('\n');
    const auto column = last_nl == std::string_view::npos ? byte : byte - last_nl - 1;
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double finite_number(const json& v, const std::string& field) {
    if (!v.is_number()) field_error(field, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) field_error(field, "value is not finite");
    return x;
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, line_column(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                                               e.what());
    } catch (const json::exception& e) {
        // e.g. a numeric literal outside double range
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "top level must be a JSON object");

    MatrixFile out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) field_error("name", "expected a string");
        out.name = doc["name"].get<std::string>();
    }

    if (!doc.contains("n")) field_error("n", "missing");
    const json& n_field = doc["n"];
    if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
        field_error("n", "expected a positive integer");
    }
    const auto n = static_cast<std::size_t>(n_field.get<long long>());

    if (!doc.contains("entries")) field_error("entries", "missing");
    const json& entries = doc["entries"];
    if (!entries.is_array()) field_error("entries", "expected an array");

    std::vector<Complex> values;
    values.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string field = "entries[" + std::to_string(k) + "]";
        const json& pair = entries[k];
        if (!pair.is_array() || pair.size() != 2) field_error(field, "expected a [re, im] pair");
        values.emplace_back(finite_number(pair[0], field + "[0]"), finite_number(pair[1], field + "[1]"));
    }
    if (values.size() != n * n) {
        throw Error(ErrorKind::ShapeError, "n = " + std::to_string(n) + " needs " +
                                               std::to_string(n * n) + " entries, got " +
                                               std::to_string(values.size()));
    }
    out.matrix = Matrix(n, n, std::move(values));
    return out;
}

Matrix parse_matrix(std::string_view text) { return parse_matrix_file(text).matrix; }

std::string serialize_matrix(const MatrixFile& file) {
    if (!file.matrix.is_square()) {
        throw Error(ErrorKind::ShapeError, "only square matrices are serialized");
    }
    json doc;
    doc["name"] = file.name;
    doc["n"] = file.matrix.rows();
    json entries = json::array();
    for (const auto& z : file.matrix.entries()) entries.push_back({z.real(), z.imag()});
    doc["entries"] = std::move(entries);
    return doc.dump() + "\n";
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    auto file = parse_matrix_file(text);
    if (file.name.empty()) file.name = path.stem().string();
    return file;
}

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
    out << serialize_matrix(file);
    if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace qradius
