#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "stylo/errors.hpp"

namespace stylo::csv {

/// Incremental RFC-4180 record reader. Handles quoted fields with
/// embedded commas, quotes ("" escape) and newlines; accepts both LF
/// and CRLF line endings and a missing final newline.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    /// Reads the next record into `row`. Returns false at end of input.
    bool next(std::vector<std::string>& row) {
        row.clear();
        int c = in_.get();
        if (c == EOF) return false;
        std::string field;
        bool quoted = false;     // currently inside quotes
        bool was_quoted = false; // field began with a quote
        ++record_;
        while (true) {
            if (quoted) {
                if (c == EOF) throw DataError("csv: unterminated quoted field at record " + std::to_string(record_));
                if (c == '"') {
                    int peek = in_.get();
                    if (peek == '"') {
                        field.push_back('"');
                    } else {
                        quoted = false;
                        c = peek;
                        continue; // reprocess the char after the closing quote
                    }
                } else {
                    field.push_back(static_cast<char>(c));
                }
            } else {
                if (c == EOF || c == '\n') {
                    if (!was_quoted && !field.empty() && field.back() == '\r') field.pop_back();
                    row.push_back(std::move(field));
                    return true;
                }
                if (c == ',') {
                    row.push_back(std::move(field));
                    field.clear();
                    was_quoted = false;
                } else if (c == '"' && field.empty() && !was_quoted) {
                    quoted = true;
                    was_quoted = true;
                } else {
                    field.push_back(static_cast<char>(c));
                }
            }
            c = in_.get();
        }
    }

    /// 1-based index of the record most recently returned.
    std::size_t record() const { return record_; }

private:
    std::istream& in_;
    std::size_t record_ = 0;
};

/// Quotes a field if it contains a comma, quote or newline.
inline std::string escape(const std::string& field) {
    bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out += "\"";
    return out;
}

inline void write_row(std::ostream& out, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << escape(fields[i]);
    }
    out << '\n';
}

} // namespace stylo::csv
