#include "cli/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace l1path::cli {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '[';
    }
    return false;
}

std::string json_cell(const nlohmann::json& v, const std::string& path) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return v.dump();
    throw ParseError(path + ": JSON entries must be numbers or strings");
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    if (line.find(',') != std::string::npos) {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
        if (!line.empty() && line.back() == ',') cells.emplace_back();
    } else {
        std::stringstream ss(line);
        std::string cell;
        while (ss >> cell) cells.push_back(cell);
    }
    return cells;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

std::vector<std::vector<std::string>> read_table(const std::string& path) {
    const std::string text = read_file(path);
    std::vector<std::vector<std::string>> rows;
    if (looks_like_json(text)) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(path + ": " + e.what());
        }
        if (!doc.is_array()) throw ParseError(path + ": expected a JSON array of rows");
        for (const auto& row : doc) {
            if (!row.is_array()) throw ParseError(path + ": expected a JSON array of rows");
            std::vector<std::string> cells;
            for (const auto& v : row) cells.push_back(json_cell(v, path));
            rows.push_back(std::move(cells));
        }
        return rows;
    }
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto cells = split_line(t);
        for (const auto& c : cells)
            if (c.empty()) throw ParseError(path + ": empty cell in '" + t + "'");
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::vector<std::string> read_list(const std::string& path) {
    const std::string text = read_file(path);
    if (looks_like_json(text)) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(path + ": " + e.what());
        }
        if (!doc.is_array()) throw ParseError(path + ": expected a JSON array");
        std::vector<std::string> out;
        for (const auto& v : doc) out.push_back(json_cell(v, path));
        return out;
    }
    const auto rows = read_table(path);
    std::vector<std::string> out;
    if (rows.size() == 1) return rows.front();
    for (const auto& row : rows) {
        if (row.size() != 1) throw ParseError(path + ": expected a single row or a single column");
        out.push_back(row.front());
    }
    return out;
}

} // namespace l1path::cli
