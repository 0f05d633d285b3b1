#pragma once
// Gold-standard word-pair datasets (MC, RG, WordSim, MTurk and compatible
// TSV/CSV files).

#include "kgsim/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kgsim {

struct WordPair {
    std::string word1;
    std::string word2;
    double score = 0.0;
};

struct DatasetSpec {
    std::string name;
    double score_min = 0.0;
    double score_max = 1.0;
};

struct GoldDataset {
    std::string name;
    double score_min = 0.0;
    double score_max = 1.0;
    std::vector<WordPair> pairs;
};

// Ranges for the four datasets the evaluation reproduces.
std::optional<DatasetSpec> known_dataset_spec(const std::string& name);

// Columns word1/word2/score, tab or comma separated, '#' comments, optional
// header row. Scores outside the declared range and unparseable rows raise
// DataError with the offending line number.
GoldDataset load_dataset(const std::string& path, const DatasetSpec& spec);

}  // namespace kgsim
