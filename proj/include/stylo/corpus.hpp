#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stylo/csv.hpp"
#include "stylo/errors.hpp"
#include "stylo/rng.hpp"

namespace stylo {

enum class Label : int { human = 0, ai = 1 };

inline const char* label_name(Label l) { return l == Label::ai ? "ai" : "human"; }

/// One essay with its authorship label.
struct Document {
    std::int64_t id = 0;
    std::string text;
    Label label = Label::human;
};

struct Corpus {
    std::vector<Document> docs;

    std::size_t size() const { return docs.size(); }
    bool empty() const { return docs.empty(); }

    /// Per-label document counts, indexed by label value.
    std::array<std::size_t, 2> counts() const {
        std::array<std::size_t, 2> c{0, 0};
        for (const auto& d : docs) ++c[static_cast<int>(d.label)];
        return c;
    }
};

struct SplitConfig {
    double test_fraction = 0.2;
    std::uint64_t seed = 0;
};

namespace detail {

inline bool whitespace_only(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch) != 0; });
}

/// Accepts "0", "1" and float spellings like "0.0" / "1.0".
inline std::optional<Label> parse_label(const std::string& raw) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(raw, &pos);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
    if (pos != raw.size()) return std::nullopt;
    if (v == 0.0) return Label::human;
    if (v == 1.0) return Label::ai;
    return std::nullopt;
}

} // namespace detail

/// Loads an RFC-4180 CSV with a header row. One Document per data row,
/// ids assigned by row order starting at 0.
inline Corpus load_csv(const std::string& path,
                       const std::string& text_column = "text",
                       const std::string& label_column = "generated") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    csv::Reader reader(in);
    std::vector<std::string> header;
    if (!reader.next(header)) throw DataError("empty corpus file: " + path);

    auto column = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw DataError("missing column '" + name + "' in " + path);
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t text_idx = column(text_column);
    const std::size_t label_idx = column(label_column);

    Corpus corpus;
    std::vector<std::string> row;
    while (reader.next(row)) {
        const std::size_t row_no = reader.record() - 1; // 1-based data row
        if (row.size() == 1 && row[0].empty()) continue; // stray blank line
        if (row.size() <= std::max(text_idx, label_idx))
            throw DataError("row " + std::to_string(row_no) + ": expected " +
                            std::to_string(header.size()) + " fields, got " + std::to_string(row.size()));
        auto label = detail::parse_label(row[label_idx]);
        if (!label)
            throw DataError("row " + std::to_string(row_no) + ": label '" + row[label_idx] +
                            "' is not 0 or 1");
        if (detail::whitespace_only(row[text_idx]))
            throw DataError("row " + std::to_string(row_no) + ": empty text");
        corpus.docs.push_back({static_cast<std::int64_t>(corpus.docs.size()),
                               std::move(row[text_idx]), *label});
    }
    if (corpus.empty()) throw DataError("empty corpus file: " + path);
    return corpus;
}

/// Loads a JSON-lines file, one object per line.
inline Corpus load_jsonl(const std::string& path,
                         const std::string& text_field = "text",
                         const std::string& label_field = "generated") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::whitespace_only(line)) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DataError("line " + std::to_string(line_no) + ": malformed JSON (" + e.what() + ")");
        }
        if (!obj.contains(text_field))
            throw DataError("line " + std::to_string(line_no) + ": missing field '" + text_field + "'");
        if (!obj.contains(label_field))
            throw DataError("line " + std::to_string(line_no) + ": missing field '" + label_field + "'");
        if (!obj[text_field].is_string())
            throw DataError("line " + std::to_string(line_no) + ": field '" + text_field + "' is not a string");

        std::optional<Label> label;
        const auto& lv = obj[label_field];
        if (lv.is_number()) {
            double v = lv.get<double>();
            if (v == 0.0) label = Label::human;
            else if (v == 1.0) label = Label::ai;
        } else if (lv.is_string()) {
            label = detail::parse_label(lv.get<std::string>());
        } else if (lv.is_boolean()) {
            label = lv.get<bool>() ? Label::ai : Label::human;
        }
        if (!label)
            throw DataError("line " + std::to_string(line_no) + ": label '" + lv.dump() + "' is not 0 or 1");

        std::string text = obj[text_field].get<std::string>();
        if (detail::whitespace_only(text))
            throw DataError("line " + std::to_string(line_no) + ": empty text");
        corpus.docs.push_back({static_cast<std::int64_t>(corpus.docs.size()), std::move(text), *label});
    }
    if (corpus.empty()) throw DataError("empty corpus file: " + path);
    return corpus;
}

/// Uniform sample of n documents without replacement. Seeded
/// Fisher-Yates selection over indices; the selected documents keep
/// their original relative order.
inline Corpus subsample(const Corpus& corpus, std::size_t n, std::uint64_t seed) {
    if (n > corpus.size())
        throw UsageError("subsample: n = " + std::to_string(n) + " exceeds corpus size " +
                         std::to_string(corpus.size()));
    std::vector<std::size_t> idx(corpus.size());
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(n);
    std::sort(idx.begin(), idx.end());
    Corpus out;
    out.docs.reserve(n);
    for (std::size_t i : idx) out.docs.push_back(corpus.docs[i]);
    return out;
}

/// Disjoint, exhaustive train/test partition. |test| = round(fraction * N).
inline std::pair<Corpus, Corpus> train_test_split(const Corpus& corpus, SplitConfig config) {
    if (corpus.empty()) throw UsageError("train_test_split: empty corpus");
    if (!(config.test_fraction > 0.0 && config.test_fraction < 1.0))
        throw UsageError("train_test_split: test_fraction must be in (0,1)");
    const std::size_t n = corpus.size();
    const auto n_test = static_cast<std::size_t>(
        std::llround(config.test_fraction * static_cast<double>(n)));

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(config.seed);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<std::size_t> test_idx(idx.begin(), idx.begin() + n_test);
    std::vector<std::size_t> train_idx(idx.begin() + n_test, idx.end());
    std::sort(test_idx.begin(), test_idx.end());
    std::sort(train_idx.begin(), train_idx.end());

    Corpus train, test;
    train.docs.reserve(train_idx.size());
    test.docs.reserve(test_idx.size());
    for (std::size_t i : train_idx) train.docs.push_back(corpus.docs[i]);
    for (std::size_t i : test_idx) test.docs.push_back(corpus.docs[i]);
    return {std::move(train), std::move(test)};
}

} // namespace stylo
