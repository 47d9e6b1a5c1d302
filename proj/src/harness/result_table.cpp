// SPDX-License-Identifier: Apache-2.0

#include "wpt/harness/result_table.hpp"
#include "wpt/errors.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wpt::harness
{
    ResultTable::ResultTable(std::string name, std::vector<Column> columns)
        : name_(std::move(name)), columns_(std::move(columns))
    {
        require(!columns_.empty(), "ResultTable: need at least one column");
        for (const auto &c : columns_)
            require(!c.name.empty() && c.name.find_first_of(",\n\r#") == std::string::npos,
                    "ResultTable: bad column name '" + c.name + "'");
    }

    std::size_t ResultTable::column_index(const std::string &name) const
    {
        for (std::size_t i = 0; i < columns_.size(); ++i)
            if (columns_[i].name == name)
                return i;
        throw ValidationError("ResultTable '" + name_ + "': no column named '" + name + "'");
    }

    std::vector<double> ResultTable::column(const std::string &name) const
    {
        const std::size_t j = column_index(name);
        std::vector<double> out;
        out.reserve(rows_.size());
        for (const auto &r : rows_)
            out.push_back(r[j]);
        return out;
    }

    void ResultTable::add_row(std::vector<double> row)
    {
        require(row.size() == columns_.size(), "ResultTable '" + name_ + "': row has " + std::to_string(row.size()) +
                                                   " values, schema has " + std::to_string(columns_.size()));
        for (std::size_t j = 0; j < row.size(); ++j)
            require(std::isfinite(row[j]),
                    "ResultTable '" + name_ + "': non-finite value in column '" + columns_[j].name + "'");
        rows_.push_back(std::move(row));
    }

    std::string to_csv(const ResultTable &table, const Metadata &meta)
    {
        std::string out = "# wpt-lab";
        for (const auto &[k, v] : meta)
        {
            require(k.find_first_of(" =\n") == std::string::npos && v.find_first_of(" \n") == std::string::npos,
                    "to_csv: metadata keys and values must not contain spaces or newlines");
            out += " " + k + "=" + v;
        }
        out += "\n";
        for (std::size_t j = 0; j < table.columns().size(); ++j)
            out += (j ? "," : "") + table.columns()[j].name;
        out += "\n";
        char buf[32];
        for (const auto &row : table.rows())
        {
            for (std::size_t j = 0; j < row.size(); ++j)
            {
                std::snprintf(buf, sizeof buf, "%.17g", row[j]);
                if (j)
                    out += ',';
                out += buf;
            }
            out += "\n";
        }
        return out;
    }

    ParsedCsv parse_csv(const std::string &text, const std::string &name)
    {
        std::istringstream in(text);
        std::string line;
        ParsedCsv out;

        require(std::getline(in, line) && line.rfind("# wpt-lab", 0) == 0, "parse_csv: missing '# wpt-lab' metadata line");
        {
            std::istringstream fields(line.substr(9));
            std::string kv;
            while (fields >> kv)
            {
                const auto eq = kv.find('=');
                require(eq != std::string::npos, "parse_csv: bad metadata field '" + kv + "'");
                out.meta[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
        }

        require(static_cast<bool>(std::getline(in, line)), "parse_csv: missing header row");
        std::vector<Column> cols;
        {
            std::istringstream h(line);
            std::string c;
            while (std::getline(h, c, ','))
                cols.push_back({c, ""});
        }
        out.table = ResultTable(name, cols);

        std::size_t lineno = 2;
        while (std::getline(in, line))
        {
            ++lineno;
            if (line.empty())
                continue;
            std::vector<double> row;
            std::istringstream r(line);
            std::string cell;
            while (std::getline(r, cell, ','))
            {
                char *end = nullptr;
                const double v = std::strtod(cell.c_str(), &end);
                require(end && *end == '\0' && !cell.empty(),
                        "parse_csv: line " + std::to_string(lineno) + ": bad number '" + cell + "'");
                row.push_back(v);
            }
            out.table.add_row(std::move(row));
        }
        return out;
    }

    void write_text_file(const std::string &path, const std::string &text)
    {
        const std::filesystem::path p(path);
        if (p.has_parent_path())
            std::filesystem::create_directories(p.parent_path());
        std::ofstream f(p, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        f << text;
        if (!f)
            throw std::runtime_error("write to '" + path + "' failed");
    }

    std::string read_text_file(const std::string &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream s;
        s << f.rdbuf();
        return s.str();
    }
}
