#include "dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace asymptest::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::string unquote(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
        s = s.substr(1, s.size() - 2);
    }
    return std::string(s);
}

}  // namespace

std::size_t Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw DataError("no column named '" + std::string(name) + "'");
}

Table parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t line = 1;

    auto end_record = [&] {
        if (field_started || !record.empty()) {
            record.push_back(std::move(field));
            records.push_back(std::move(record));
        }
        record.clear();
        field.clear();
        field_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                quoted = true;
                field_started = true;
                break;
            case ',':
                record.push_back(std::move(field));
                field.clear();
                field_started = true;
                break;
            case '\r':
                break;
            case '\n':
                end_record();
                ++line;
                break;
            default:
                field.push_back(c);
                field_started = true;
        }
    }
    if (quoted) throw DataError("unterminated quoted field near line " + std::to_string(line));
    end_record();

    if (records.empty()) throw DataError("CSV input has no header row");
    Table table;
    table.header = std::move(records.front());
    for (auto& h : table.header) h = std::string(trim(h));
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != table.header.size()) {
            throw DataError("CSV record " + std::to_string(r + 1) + " has " +
                            std::to_string(records[r].size()) + " fields, expected " +
                            std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

Table read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

double parse_number(std::string_view cell) {
    std::string_view s = trim(cell);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw DataError("not a finite number: '" + std::string(cell) + "'");
    }
    return value;
}

DatasetRef parse_dataset_ref(std::string_view text) {
    DatasetRef ref;
    ref.text = std::string(text);
    std::string_view rest = text;

    if (!rest.empty() && rest.back() == ']') {
        const auto open = rest.rfind('[');
        if (open == std::string_view::npos) throw UsageError("unbalanced ']' in '" + ref.text + "'");
        const std::string_view predicate = rest.substr(open + 1, rest.size() - open - 2);
        const auto eq = predicate.find("==");
        if (eq == std::string_view::npos) {
            throw UsageError("filter must read column==value in '" + ref.text + "'");
        }
        ref.filter = Filter{std::string(trim(predicate.substr(0, eq))), unquote(predicate.substr(eq + 2))};
        if (ref.filter->column.empty()) throw UsageError("empty filter column in '" + ref.text + "'");
        rest = rest.substr(0, open);
    }

    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == rest.size()) {
        throw UsageError("dataset reference must read source:column, got '" + ref.text + "'");
    }
    ref.source = std::string(rest.substr(0, colon));
    ref.column = std::string(rest.substr(colon + 1));
    return ref;
}

const Table& builtin_iris() {
    static const Table table = parse_csv(iris_csv());
    return table;
}

Sample ingest(const DatasetRef& ref) {
    Table loaded;
    const Table* table = nullptr;
    if (ref.source == "iris") {
        table = &builtin_iris();
    } else {
        loaded = read_csv_file(ref.source);
        table = &loaded;
    }

    const std::size_t target = table->column(ref.column);
    std::optional<std::size_t> filter_column;
    if (ref.filter) filter_column = table->column(ref.filter->column);

    std::vector<double> values;
    for (const auto& row : table->rows) {
        if (filter_column && trim(row[*filter_column]) != ref.filter->value) continue;
        values.push_back(parse_number(row[target]));
    }
    if (values.size() < 2) {
        throw DataError("'" + ref.text + "' selects " + std::to_string(values.size()) +
                        " value(s); at least 2 are required");
    }
    return Sample(std::move(values));
}

}  // namespace asymptest::cli
