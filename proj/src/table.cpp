#include "augur/table.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "augur/version.hpp"

namespace augur {

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw std::invalid_argument("table needs at least one column");
}

void ResultTable::set_config(std::string key, std::string value) {
    config_[std::move(key)] = std::move(value);
}

void ResultTable::set_config(std::string key, double value) {
    config_[std::move(key)] = format_double(value);
}

void ResultTable::set_config(std::string key, std::int64_t value) {
    config_[std::move(key)] = std::to_string(value);
}

void ResultTable::add_row(std::vector<CellValue> row) {
    if (row.size() != columns_.size()) throw std::invalid_argument("row width mismatch");
    rows_.push_back(std::move(row));
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_to_string(const CellValue& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
    return std::get<std::string>(cell);
}

std::string timestamp_now() {
    auto now = std::chrono::system_clock::now();
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    return std::to_string(secs);
}

}  // namespace

void ResultTable::write_csv(std::ostream& out, bool timestamp) const {
    out << "# augur " << kVersion << "\n";
    if (timestamp) out << "# timestamp " << timestamp_now() << "\n";
    for (const auto& [key, value] : config_) out << "# config " << key << "=" << value << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out << (i ? "," : "") << csv_escape(columns_[i]);
    out << "\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_escape(cell_to_string(row[i]));
        out << "\n";
    }
}

void ResultTable::write_json(std::ostream& out, bool timestamp) const {
    nlohmann::json doc;
    doc["config"] = nlohmann::json::object();
    doc["config"]["version"] = kVersion;
    if (timestamp) doc["config"]["timestamp"] = timestamp_now();
    for (const auto& [key, value] : config_) doc["config"][key] = value;
    doc["columns"] = columns_;
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : rows_) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& cell : row) {
            if (const auto* i = std::get_if<std::int64_t>(&cell)) {
                jrow.push_back(*i);
            } else if (const auto* d = std::get_if<double>(&cell)) {
                if (std::isfinite(*d))
                    jrow.push_back(*d);
                else
                    jrow.push_back(nullptr);
            } else {
                jrow.push_back(std::get<std::string>(cell));
            }
        }
        doc["rows"].push_back(std::move(jrow));
    }
    out << doc.dump(2) << "\n";
}

}  // namespace augur
