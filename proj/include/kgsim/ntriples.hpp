#pragma once
// Streaming reader for the N-Triples subset used by WordNet RDF dumps:
// `<s> <p> <o> .` and `<s> <p> "literal" .` lines, '#' comments, optional
// language tags / datatype suffixes on literals. Input may be gzip
// compressed; plain files read through the same zlib handle.

#include "kgsim/types.hpp"

#include <string>

namespace kgsim {

struct Triple {
    std::string subject;
    std::string predicate;
    std::string object;        // IRI or decoded literal text
    bool object_is_literal = false;
};

class NTriplesReader {
public:
    explicit NTriplesReader(const std::string& path);
    ~NTriplesReader();
    NTriplesReader(const NTriplesReader&) = delete;
    NTriplesReader& operator=(const NTriplesReader&) = delete;

    // Fills the next triple; false at end of input. Malformed lines raise
    // DataError carrying the 1-based line number.
    bool next(Triple& out);

    std::size_t line_number() const { return line_; }

private:
    bool read_line(std::string& out);

    void* gz_ = nullptr;  // gzFile
    std::string path_;
    std::string buffer_;
    std::size_t buf_pos_ = 0;
    std::size_t line_ = 0;
    bool eof_ = false;
};

}  // namespace kgsim
