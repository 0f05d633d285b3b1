#include "kgsim/loader.hpp"

#include "kgsim/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

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

RelationCategory parse_category(const std::string& s, const std::string& where) {
    if (s == "taxonomic") return RelationCategory::Taxonomic;
    if (s == "non-taxonomic" || s == "nontaxonomic") return RelationCategory::NonTaxonomic;
    if (s == "structural") return RelationCategory::Structural;
    if (s == "ignore") return RelationCategory::Ignore;
    throw DataError(where + ": unknown category '" + s + "'");
}

std::string inferred_inverse(const std::string& name) {
    auto swap_suffix = [&](const std::string& a, const std::string& b) -> std::string {
        if (name.size() >= a.size() && name.compare(name.size() - a.size(), a.size(), a) == 0)
            return name.substr(0, name.size() - a.size()) + b;
        return "";
    };
    if (auto s = swap_suffix("meronym", "holonym"); !s.empty()) return s;
    if (auto s = swap_suffix("holonym", "meronym"); !s.empty()) return s;
    if (auto s = swap_suffix("hypernym", "hyponym"); !s.empty()) return s;
    if (auto s = swap_suffix("hyponym", "hypernym"); !s.empty()) return s;
    return "";
}

// Local name of an IRI: text after the last '/' (or whole string).
std::string local_name(const std::string& iri) {
    auto pos = iri.find_last_of('/');
    return pos == std::string::npos ? iri : iri.substr(pos + 1);
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Fallback word for an unlabeled sense: "<word>-n#1" or "<word>-n-1" style
// local names reduce to "<word>".
std::string word_from_sense_iri(const std::string& iri, const std::string& pos_suffix) {
    std::string local = local_name(iri);
    if (auto hash = local.find('#'); hash != std::string::npos) local = local.substr(0, hash);
    if (ends_with(local, pos_suffix)) local = local.substr(0, local.size() - pos_suffix.size());
    return normalize_word(local);
}

}  // namespace

// ---------------------------------------------------------------------------
// PredicateMapping

void PredicateMapping::add(MappingRow row) {
    if (row.inverse.empty()) row.inverse = inferred_inverse(row.type_name);
    auto [it, fresh] = by_iri_.emplace(row.iri, rows_.size());
    if (!fresh) throw DataError("duplicate mapping for predicate " + row.iri);
    rows_.push_back(std::move(row));
}

const MappingRow* PredicateMapping::find(const std::string& iri) const {
    auto it = by_iri_.find(iri);
    return it == by_iri_.end() ? nullptr : &rows_[it->second];
}

PredicateMapping PredicateMapping::load_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open mapping file " + path);
    PredicateMapping mapping;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> cols;
        std::stringstream ss(t);
        std::string col;
        while (std::getline(ss, col, '\t')) cols.push_back(trim(col));
        std::string where = path + ":" + std::to_string(line_no);
        if (cols.size() < 3) throw DataError(where + ": expected IRI<TAB>name<TAB>category");
        MappingRow row;
        row.iri = cols[0];
        row.type_name = cols[1];
        row.category = parse_category(cols[2], where);
        if (cols.size() > 3) row.inverse = cols[3];
        mapping.add(std::move(row));
    }
    return mapping;
}

// ---------------------------------------------------------------------------
// load_graph

namespace {

// Temporary interned view of the mapped triples; assembled after the stream
// so the noun filter can see the whole structure.
struct Staging {
    std::vector<std::string> iris;
    std::unordered_map<std::string, std::uint32_t> index;

    std::uint32_t intern(const std::string& iri) {
        auto it = index.find(iri);
        if (it != index.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(iris.size());
        iris.push_back(iri);
        index.emplace(iri, id);
        return id;
    }

    struct Edge {
        std::uint32_t subject;
        std::uint32_t object;
        std::uint32_t row;  // mapping row index
    };
    std::vector<Edge> taxonomic;
    std::vector<Edge> non_taxonomic;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> membership;  // synset, sense
    std::vector<std::pair<std::uint32_t, std::string>> labels;
    std::unordered_map<std::uint32_t, bool> pos_is_noun;
};

bool value_says_noun(const std::string& v) {
    if (v == "n" || v == "noun") return true;
    return ends_with(v, "noun") || ends_with(v, "#n") || ends_with(v, "/n");
}

}  // namespace

KnowledgeGraph load_graph(const std::string& ntriples_path, const PredicateMapping& mapping,
                          const LoadOptions& options, LoadReport* report) {
    LoadReport local_report;
    LoadReport& rep = report ? *report : local_report;
    rep = LoadReport{};

    Staging st;
    const auto& rows = mapping.rows();
    std::unordered_map<std::string, std::uint32_t> row_index;
    for (std::uint32_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i].iri, i);

    NTriplesReader reader(ntriples_path);
    Triple triple;
    while (reader.next(triple)) {
        ++rep.triples_total;
        auto it = row_index.find(triple.predicate);
        if (it == row_index.end()) {
            if (options.strict)
                throw DataError(ntriples_path + ":" + std::to_string(reader.line_number()) +
                                ": unmapped predicate <" + triple.predicate + ">");
            ++rep.unmapped;
            ++rep.unmapped_iris[triple.predicate];
            continue;
        }
        const MappingRow& row = rows[it->second];
        switch (row.category) {
            case RelationCategory::Ignore:
                ++rep.ignored;
                break;
            case RelationCategory::Structural: {
                std::uint32_t s = st.intern(triple.subject);
                if (row.type_name == "label") {
                    if (!triple.object_is_literal)
                        throw DataError(ntriples_path + ":" +
                                        std::to_string(reader.line_number()) +
                                        ": label object must be a literal");
                    st.labels.emplace_back(s, normalize_word(triple.object));
                } else if (row.type_name == "synset_member") {
                    st.membership.emplace_back(s, st.intern(triple.object));
                } else if (row.type_name == "member_of_synset") {
                    st.membership.emplace_back(st.intern(triple.object), s);
                } else if (row.type_name == "part_of_speech") {
                    st.pos_is_noun[s] = value_says_noun(triple.object);
                } else {
                    throw DataError("mapping names unknown structural type '" + row.type_name +
                                    "'");
                }
                break;
            }
            case RelationCategory::Taxonomic:
            case RelationCategory::NonTaxonomic: {
                if (triple.object_is_literal)
                    throw DataError(ntriples_path + ":" + std::to_string(reader.line_number()) +
                                    ": literal object on relation <" + triple.predicate + ">");
                Staging::Edge e{st.intern(triple.subject), st.intern(triple.object), it->second};
                (row.category == RelationCategory::Taxonomic ? st.taxonomic : st.non_taxonomic)
                    .push_back(e);
                break;
            }
        }
    }

    // Node roles. Synsets: taxonomic endpoints plus the synset side of
    // membership. Senses: the sense side of membership.
    std::vector<std::uint8_t> is_synset_role(st.iris.size(), 0), is_sense_role(st.iris.size(), 0);
    for (const auto& e : st.taxonomic) {
        is_synset_role[e.subject] = 1;
        is_synset_role[e.object] = 1;
    }
    for (auto [synset, sense] : st.membership) {
        is_synset_role[synset] = 1;
        is_sense_role[sense] = 1;
    }
    for (std::uint32_t i = 0; i < st.iris.size(); ++i)
        if (is_synset_role[i] && is_sense_role[i])
            throw DataError("node is both synset and sense: " + st.iris[i]);

    auto synset_is_noun = [&](std::uint32_t id) {
        if (auto it = st.pos_is_noun.find(id); it != st.pos_is_noun.end()) return it->second;
        std::string local = local_name(st.iris[id]);
        if (auto hash = local.find('#'); hash != std::string::npos) local = local.substr(0, hash);
        return options.pos_suffix.empty() || ends_with(local, options.pos_suffix);
    };

    GraphBuilder builder;
    builder.add_relation_type("synonym", RelationCategory::NonTaxonomic, "synonym", true);
    std::vector<TypeId> row_type(rows.size(), kNoType);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.category != RelationCategory::Taxonomic &&
            row.category != RelationCategory::NonTaxonomic)
            continue;
        row_type[i] = builder.add_relation_type(row.type_name, row.category, row.inverse);
    }

    std::vector<NodeId> node_of(st.iris.size(), kNoNode);
    for (std::uint32_t i = 0; i < st.iris.size(); ++i) {
        if (!is_synset_role[i]) continue;
        if (!synset_is_noun(i)) {
            ++rep.dropped_pos;
            continue;
        }
        node_of[i] = builder.add_synset(st.iris[i]);
    }
    std::vector<std::uint8_t> sense_labeled(st.iris.size(), 0);
    for (auto [synset, sense] : st.membership) {
        if (node_of[synset] == kNoNode) {
            ++rep.dropped_pos;
            continue;
        }
        if (node_of[sense] == kNoNode)
            node_of[sense] = builder.add_sense(st.iris[sense], "", node_of[synset]);
    }
    for (const auto& [tmp, word] : st.labels) {
        if (node_of[tmp] == kNoNode) continue;
        builder.add_label(node_of[tmp], word);
        if (is_sense_role[tmp]) sense_labeled[tmp] = 1;
    }
    for (auto [synset, sense] : st.membership) {
        (void)synset;
        if (node_of[sense] == kNoNode || sense_labeled[sense]) continue;
        builder.add_label(node_of[sense], word_from_sense_iri(st.iris[sense], options.pos_suffix));
    }

    auto add_edges = [&](const std::vector<Staging::Edge>& edges) {
        for (const auto& e : edges) {
            NodeId s = node_of[e.subject];
            NodeId o = node_of[e.object];
            if (s == kNoNode || o == kNoNode) {
                bool known = is_synset_role[e.subject] || is_sense_role[e.subject] ||
                             is_synset_role[e.object] || is_sense_role[e.object];
                ++(known ? rep.dropped_pos : rep.dropped_endpoint);
                continue;
            }
            builder.add_instance(row_type[e.row], s, o);
            ++rep.retained;
        }
    };
    // Duplicate instances are silently deduped by the builder; reconcile the
    // retained count afterwards.
    add_edges(st.taxonomic);
    add_edges(st.non_taxonomic);

    if (options.derive_synonyms) rep.synonyms_added = builder.derive_synonym_edges();

    KnowledgeGraph graph = builder.build(options.graph, options.threads);
    std::uint64_t stored = 0;
    for (const auto& t : graph.relation_types()) stored += t.frequency;
    std::uint64_t attempted = rep.retained + rep.synonyms_added;
    rep.duplicates = attempted > stored ? attempted - stored : 0;
    rep.retained = stored;
    return graph;
}

// ---------------------------------------------------------------------------
// GraphStats

GraphStats compute_stats(const KnowledgeGraph& graph) {
    GraphStats s;
    s.synsets = graph.synset_count();
    s.senses = graph.sense_count();
    s.max_depth = graph.max_depth();
    for (const auto& t : graph.relation_types()) {
        if (t.category == RelationCategory::Taxonomic) {
            s.taxonomic.push_back({t.name, t.frequency, t.prevalence});
            s.instance_relations += t.frequency;
        } else if (t.category == RelationCategory::NonTaxonomic) {
            s.non_taxonomic.push_back({t.name, t.frequency, t.prevalence});
            s.instance_relations += t.frequency;
        }
    }
    return s;
}

std::string GraphStats::serialize() const {
    std::ostringstream out;
    out << "synsets\t" << synsets << "\n";
    out << "senses\t" << senses << "\n";
    out << "instance_relations\t" << instance_relations << "\n";
    out << "max_depth\t" << max_depth << "\n";
    char buf[64];
    auto emit = [&](const char* section, const std::vector<TypeStat>& stats) {
        out << "[" << section << "]\n";
        for (const auto& t : stats) {
            std::snprintf(buf, sizeof buf, "%.4f", t.prevalence);
            out << t.name << "\t" << t.frequency << "\t" << buf << "\n";
        }
    };
    emit("non-taxonomic", non_taxonomic);
    emit("taxonomic", taxonomic);
    return out.str();
}

}  // namespace kgsim
