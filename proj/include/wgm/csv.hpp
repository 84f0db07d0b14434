#ifndef WGM_CSV_HPP
#define WGM_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace wgm
{
// Numeric table: header row, comma separator, scientific notation.
// Lines starting with '#' carry metadata and are skipped by the parser.
struct CsvTable
{
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string write_csv(const CsvTable& table);
CsvTable parse_csv(std::string_view text);
void save_text(const std::string& path, std::string_view text);
} // namespace wgm

#endif
