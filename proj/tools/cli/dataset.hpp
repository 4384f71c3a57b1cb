#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asymptest/error.hpp"
#include "asymptest/sample.hpp"

namespace asymptest::cli {

/// Unreadable file, malformed CSV, missing column, non-numeric cell.
class DataError : public Error {
public:
    using Error::Error;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of `name` in the header; throws DataError if absent.
    [[nodiscard]] std::size_t column(std::string_view name) const;
};

/// RFC 4180 style: comma separated, header row, optional double quotes with
/// "" as an escaped quote, LF or CRLF line ends. Blank lines are skipped.
[[nodiscard]] Table parse_csv(std::string_view text);
[[nodiscard]] Table read_csv_file(const std::string& path);

/// Strict numeric cell parser ("." decimal); throws DataError on "NA",
/// empty cells, trailing garbage and non-finite values.
[[nodiscard]] double parse_number(std::string_view cell);

struct Filter {
    std::string column;
    std::string value;
};

/// `source:column[filtercol==value]`, where source is a CSV path or the
/// builtin name "iris". The filter is optional and the value may be quoted.
struct DatasetRef {
    std::string source;
    std::string column;
    std::optional<Filter> filter;
    std::string text;
};

/// Throws UsageError on a malformed reference.
[[nodiscard]] DatasetRef parse_dataset_ref(std::string_view text);

/// Values of the referenced column for rows passing the filter, in file order.
[[nodiscard]] Sample ingest(const DatasetRef& ref);

[[nodiscard]] std::string_view iris_csv();
[[nodiscard]] const Table& builtin_iris();

}  // namespace asymptest::cli
