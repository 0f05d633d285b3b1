#pragma once
// WordNet-style graph ingestion: predicate mapping, the N-Triples loader
// with its noun filter and synonym derivation, and graph statistics.

#include "kgsim/graph.hpp"
#include "kgsim/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kgsim {

struct MappingRow {
    std::string iri;
    std::string type_name;
    RelationCategory category;
    std::string inverse;  // optional 4th column; inferred for *_meronym pairs
};

// Canonical structural names understood by the loader:
//   synset_member     subject synset -> object sense
//   member_of_synset  subject sense  -> object synset
//   label             subject node   -> literal surface word
//   part_of_speech    subject node   -> IRI/literal; nouns retained
class PredicateMapping {
public:
    static PredicateMapping load_tsv(const std::string& path);

    void add(MappingRow row);
    const MappingRow* find(const std::string& iri) const;
    const std::vector<MappingRow>& rows() const { return rows_; }

private:
    std::vector<MappingRow> rows_;
    std::map<std::string, std::size_t> by_iri_;
};

struct LoadOptions {
    bool strict = false;            // unmapped predicate is an error
    std::string pos_suffix = "-n";  // IRI fallback noun filter for synsets
    bool derive_synonyms = true;
    int threads = 1;
    GraphOptions graph;
};

struct LoadReport {
    std::uint64_t triples_total = 0;
    std::uint64_t retained = 0;           // instances stored in the graph
    std::uint64_t ignored = 0;            // predicates mapped to `ignore`
    std::uint64_t unmapped = 0;           // predicates missing from the mapping
    std::uint64_t dropped_pos = 0;        // edges touching non-noun synsets
    std::uint64_t dropped_endpoint = 0;   // edges touching unknown nodes
    std::uint64_t duplicates = 0;
    std::uint64_t synonyms_added = 0;
    std::map<std::string, std::uint64_t> unmapped_iris;
};

KnowledgeGraph load_graph(const std::string& ntriples_path, const PredicateMapping& mapping,
                          const LoadOptions& options = {}, LoadReport* report = nullptr);

struct TypeStat {
    std::string name;
    std::uint64_t frequency = 0;
    double prevalence = 0.0;
};

struct GraphStats {
    std::size_t synsets = 0;
    std::size_t senses = 0;
    std::uint64_t instance_relations = 0;  // taxonomic + non-taxonomic
    std::uint32_t max_depth = 0;
    std::vector<TypeStat> non_taxonomic;  // canonical order
    std::vector<TypeStat> taxonomic;

    // Stable textual form; identical inputs serialize byte-identically.
    std::string serialize() const;
};

GraphStats compute_stats(const KnowledgeGraph& graph);

}  // namespace kgsim
