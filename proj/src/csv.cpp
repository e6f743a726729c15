#include "clarke/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "clarke/errors.hpp"

namespace clarke {

std::string format_double(double value)
{
    std::array<char, 32> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return {buf.data(), result.ptr};
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write " + tmp.string());
        out << content;
        if (!out)
            throw Error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string to_csv_string(const CsvTable& table)
{
    std::string s;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c)
            s += ',';
        s += table.header[c];
    }
    s += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                s += ',';
            s += format_double(row[c]);
        }
        s += '\n';
    }
    return s;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table)
{
    write_text_atomic(path, to_csv_string(table));
}

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    CsvTable table;
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(path.string() + ": empty file");
    table.header = split(line);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const auto cells = split(line);
        if (cells.size() != table.header.size())
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": expected "
                             + std::to_string(table.header.size()) + " cells, got "
                             + std::to_string(cells.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc() || ptr != cell.data() + cell.size())
                throw ParseError(path.string() + ":" + std::to_string(line_no)
                                 + ": not a number: '" + cell + "'");
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable validate_csv(const std::filesystem::path& path, const std::vector<std::string>& expected)
{
    CsvTable table = read_csv(path);
    if (table.header != expected)
        throw ParseError(path.string() + ": unexpected header");
    return table;
}

}  // namespace clarke
