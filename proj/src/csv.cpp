#include "wgm/csv.hpp"

#include <fstream>
#include <sstream>

#include "wgm/errors.hpp"
#include "wgm/report.hpp"

namespace wgm
{
std::string write_csv(const CsvTable& table)
{
    std::ostringstream os;
    for (const auto& c : table.comments)
        os << "# " << c << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_number(row[i]);
        os << '\n';
    }
    return os.str();
}

CsvTable parse_csv(std::string_view text)
{
    CsvTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = true;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        if (line[0] == '#')
        {
            table.comments.push_back(line.size() > 2 ? line.substr(2) : std::string{});
            continue;
        }
        std::istringstream cells(line);
        std::string cell;
        if (header)
        {
            while (std::getline(cells, cell, ','))
                table.columns.push_back(cell);
            header = false;
            continue;
        }
        std::vector<double> row;
        while (std::getline(cells, cell, ','))
            row.push_back(std::stod(cell));
        if (row.size() != table.columns.size())
            throw ConfigError("csv row width does not match the header");
        table.rows.push_back(std::move(row));
    }
    return table;
}

void save_text(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write '" + path + "'");
    out << text;
}
} // namespace wgm
