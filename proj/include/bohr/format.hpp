#pragma once

#include <cstdlib>
#include <iomanip>
#include <locale>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace bohr {

enum class OutputFormat { table, json, csv };

inline std::optional<OutputFormat> format_from_string(std::string_view s) {
    if (s == "table") return OutputFormat::table;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    return std::nullopt;
}

/// Scientific notation with a fixed number of significant digits,
/// classic locale (dot decimal separator) regardless of environment.
inline std::string format_significant(double v, int digits) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::scientific << std::setprecision(digits - 1) << v;
    return os.str();
}

using Cell = std::variant<std::string, long long, double>;

/// Column-named rows; the shared shape every subcommand renders from.
struct DataTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct RenderMeta {
    std::string command;
    std::string constants;  ///< provenance tag of the active set
    std::string version;
    int precision = 6;
};

inline std::string cell_text(const Cell& c, int precision) {
    if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
    if (std::holds_alternative<long long>(c))
        return std::to_string(std::get<long long>(c));
    return format_significant(std::get<double>(c), precision);
}

inline std::string render_table(const DataTable& t, int precision) {
    std::vector<size_t> width(t.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows) {
        std::vector<std::string> texts;
        for (size_t i = 0; i < row.size(); ++i) {
            texts.push_back(cell_text(row[i], precision));
            width[i] = std::max(width[i], texts.back().size());
        }
        cells.push_back(std::move(texts));
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& texts) {
        std::string line;
        for (size_t i = 0; i < texts.size(); ++i) {
            if (i) line += "  ";
            line += texts[i];
            if (i + 1 < texts.size())
                line.append(width[i] - texts[i].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    };
    emit(t.columns);
    for (const auto& row : cells) emit(row);
    return os.str();
}

inline std::string render_csv(const DataTable& t, int precision) {
    std::ostringstream os;
    for (size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << cell_text(row[i], precision);
        os << '\n';
    }
    return os.str();
}

/// Round through the textual form so precision applies to JSON numbers too.
inline double round_to_significant(double v, int digits) {
    return std::strtod(format_significant(v, digits).c_str(), nullptr);
}

inline nlohmann::ordered_json json_cell(const Cell& c, int precision) {
    if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
    if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
    return round_to_significant(std::get<double>(c), precision);
}

inline nlohmann::ordered_json json_document(const DataTable& t, const RenderMeta& meta) {
    nlohmann::ordered_json doc;
    doc["meta"] = {{"command", meta.command},
                   {"constants", meta.constants},
                   {"version", meta.version},
                   {"precision", meta.precision}};
    doc["data"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (size_t i = 0; i < row.size(); ++i)
            obj[t.columns[i]] = json_cell(row[i], meta.precision);
        doc["data"].push_back(std::move(obj));
    }
    return doc;
}

inline std::string render_json(const DataTable& t, const RenderMeta& meta) {
    return json_document(t, meta).dump(2) + "\n";
}

inline std::string render(const DataTable& t, OutputFormat f, const RenderMeta& meta) {
    switch (f) {
        case OutputFormat::csv: return render_csv(t, meta.precision);
        case OutputFormat::json: return render_json(t, meta);
        case OutputFormat::table: default: return render_table(t, meta.precision);
    }
}

}  // namespace bohr
