#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace augur {

using CellValue = std::variant<std::int64_t, double, std::string>;

// Columnar experiment output. CSV emission is RFC-4180-style with
// '#'-prefixed metadata comment lines (config echo, version, timestamp)
// ahead of the header row; JSON emission is one object {config, rows}.
// Output is byte-identical for identical configs apart from the timestamp
// line, which carries its own prefix so diffs can exclude it.
class ResultTable {
  public:
    explicit ResultTable(std::vector<std::string> columns);

    void set_config(std::string key, std::string value);
    void set_config(std::string key, double value);
    void set_config(std::string key, std::int64_t value);

    void add_row(std::vector<CellValue> row);

    std::size_t row_count() const { return rows_.size(); }
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<CellValue>>& rows() const { return rows_; }

    void write_csv(std::ostream& out, bool timestamp = true) const;
    void write_json(std::ostream& out, bool timestamp = true) const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<CellValue>> rows_;
    std::map<std::string, std::string> config_;  // ordered for stable output
};

// Canonical number formatting shared by both emitters ("%.10g", with
// non-finite values spelled inf/-inf/nan in CSV and null in JSON).
std::string format_double(double value);

}  // namespace augur
