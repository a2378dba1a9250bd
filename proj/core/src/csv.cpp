#include "wxcompress/csv.hpp"

#include <cstdio>
#include <istream>

namespace wxc {

std::optional<std::vector<std::string>> CsvReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        std::size_t i = 0;
        while (true) {
            if (i >= line.size()) {
                if (quoted) {
                    // Embedded newline inside a quoted field.
                    std::string more;
                    if (!std::getline(in_, more)) break;
                    ++line_;
                    if (!more.empty() && more.back() == '\r') more.pop_back();
                    line += '\n';
                    line += more;
                    continue;
                }
                break;
            }
            char c = line[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field.push_back('"');
                        ++i;
                    } else {
                        quoted = false;
                    }
                } else {
                    field.push_back(c);
                }
            } else if (c == '"' && field.empty()) {
                quoted = true;
            } else if (c == ',') {
                fields.push_back(std::move(field));
                field.clear();
            } else {
                field.push_back(c);
            }
            ++i;
        }
        fields.push_back(std::move(field));
        return fields;
    }
    return std::nullopt;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace wxc
