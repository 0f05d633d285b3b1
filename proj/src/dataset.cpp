#include "kgsim/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

namespace kgsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string normalize_word(std::string s) {
    for (char& c : s) {
        if (c == '_') c = ' ';
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

std::optional<double> parse_score(const std::string& s) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

}  // namespace

std::optional<DatasetSpec> known_dataset_spec(const std::string& name) {
    if (name == "mc") return DatasetSpec{"mc", 0.0, 4.0};
    if (name == "rg") return DatasetSpec{"rg", 0.0, 4.0};
    if (name == "wordsim") return DatasetSpec{"wordsim", 0.0, 10.0};
    if (name == "mturk") return DatasetSpec{"mturk", 1.0, 5.0};
    return std::nullopt;
}

GoldDataset load_dataset(const std::string& path, const DatasetSpec& spec) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open dataset " + path);
    GoldDataset ds;
    ds.name = spec.name;
    ds.score_min = spec.score_min;
    ds.score_max = spec.score_max;

    std::string line;
    std::size_t line_no = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        char sep = t.find('\t') != std::string::npos ? '\t' : ',';
        auto cols = split(t, sep);
        std::string where = path + ":" + std::to_string(line_no);
        if (cols.size() < 3) throw DataError(where + ": expected word1, word2, score");
        auto score = parse_score(cols[2]);
        if (first_row && !score) {
            // Header row.
            first_row = false;
            continue;
        }
        first_row = false;
        if (!score) throw DataError(where + ": non-numeric score '" + cols[2] + "'");
        if (cols[0].empty() || cols[1].empty()) throw DataError(where + ": empty word");
        if (*score < spec.score_min || *score > spec.score_max)
            throw DataError(where + ": score " + cols[2] + " outside [" +
                            std::to_string(spec.score_min) + ", " +
                            std::to_string(spec.score_max) + "]");
        ds.pairs.push_back({normalize_word(cols[0]), normalize_word(cols[1]), *score});
    }
    return ds;
}

}  // namespace kgsim
