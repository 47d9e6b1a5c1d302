// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_HARNESS_RESULT_TABLE_HPP
#define WPT_HARNESS_RESULT_TABLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wpt::harness
{
    inline constexpr const char *kVersion = "0.1.0";

    struct Column
    {
        std::string name; // header text, unit suffix included (e.g. "Q_1_W")
        std::string unit; // "W", "m", "1", ...
    };

    // A rectangular table of finite reals with a fixed column schema.
    class ResultTable
    {
    public:
        ResultTable() = default;
        ResultTable(std::string name, std::vector<Column> columns);

        const std::string &name() const { return name_; }
        const std::vector<Column> &columns() const { return columns_; }
        const std::vector<std::vector<double>> &rows() const { return rows_; }
        std::size_t column_index(const std::string &name) const;
        std::vector<double> column(const std::string &name) const;

        // Throws ValidationError on a width mismatch or a non-finite value.
        void add_row(std::vector<double> row);

    private:
        std::string name_;
        std::vector<Column> columns_;
        std::vector<std::vector<double>> rows_;
    };

    // "key=value" pairs written to the leading "#" line, in key order.
    using Metadata = std::map<std::string, std::string>;

    // First line: "# wpt-lab k1=v1 k2=v2 ...", then the header row, then rows
    // with "%.17g" values. Lines end in '\n'.
    std::string to_csv(const ResultTable &table, const Metadata &meta);

    struct ParsedCsv
    {
        Metadata meta;
        ResultTable table;
    };
    // Inverse of to_csv; the table takes `name` and unitless columns.
    ParsedCsv parse_csv(const std::string &text, const std::string &name = "table");

    // Writes `text` to `path`, creating parent directories.
    void write_text_file(const std::string &path, const std::string &text);
    std::string read_text_file(const std::string &path);
}

#endif
