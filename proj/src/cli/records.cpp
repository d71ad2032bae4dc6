#include "cli/records.hpp"

#include <array>
#include <sstream>
#include <utility>

namespace l1path::cli {

namespace {

constexpr std::array<std::pair<Field, const char*>, 11> kNames{{
    {Field::Counter, "counter"},
    {Field::Time, "time"},
    {Field::X, "x"},
    {Field::Misfit, "misfit"},
    {Field::Remainder, "remainder"},
    {Field::Penalty, "penalty"},
    {Field::Support, "support"},
    {Field::L1Norm, "l1norm"},
    {Field::Discrepancy, "discrepancy"},
    {Field::SupportSize, "support_size"},
    {Field::FixedPointResidual, "fixed_point_residual"},
}};

std::string csv_cell(const nlohmann::ordered_json& v) {
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

} // namespace

const char* field_name(Field f) {
    for (const auto& [field, name] : kNames)
        if (field == f) return name;
    return "?";
}

std::vector<Field> parse_fields(const std::string& spec) {
    std::vector<Field> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto b = token.find_first_not_of(' ');
        const auto e = token.find_last_not_of(' ');
        if (b == std::string::npos) throw ParseError("empty record field in '" + spec + "'");
        token = token.substr(b, e - b + 1);
        bool found = false;
        for (const auto& [field, name] : kNames) {
            if (token == name) {
                out.push_back(field);
                found = true;
            }
        }
        if (!found) throw ParseError("unknown record field '" + token + "'");
    }
    if (out.empty()) throw ParseError("empty record specification");
    return out;
}

std::string header_line(const std::vector<Field>& fields, Format format) {
    if (format == Format::Jsonl) return {};
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += field_name(fields[i]);
    }
    return out + '\n';
}

std::string format_record(const std::vector<Field>& fields, const nlohmann::ordered_json& record, Format format) {
    if (format == Format::Jsonl) return record.dump() + '\n';
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(record.at(field_name(fields[i])));
    }
    return out + '\n';
}

} // namespace l1path::cli
