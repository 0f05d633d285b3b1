#include "kgsim/ntriples.hpp"

#include <zlib.h>

#include <cstring>

namespace kgsim {

namespace {

constexpr std::size_t kChunk = 1 << 16;

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& what) {
    throw DataError(path + ":" + std::to_string(line) + ": " + what);
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

}  // namespace

NTriplesReader::NTriplesReader(const std::string& path) : path_(path) {
    gz_ = gzopen(path.c_str(), "rb");
    if (!gz_) throw DataError("cannot open " + path);
    gzbuffer(static_cast<gzFile>(gz_), kChunk);
}

NTriplesReader::~NTriplesReader() {
    if (gz_) gzclose(static_cast<gzFile>(gz_));
}

bool NTriplesReader::read_line(std::string& out) {
    out.clear();
    for (;;) {
        if (buf_pos_ < buffer_.size()) {
            const char* base = buffer_.data() + buf_pos_;
            std::size_t avail = buffer_.size() - buf_pos_;
            const char* nl = static_cast<const char*>(std::memchr(base, '\n', avail));
            if (nl) {
                out.append(base, nl - base);
                buf_pos_ += (nl - base) + 1;
                return true;
            }
            out.append(base, avail);
            buf_pos_ = buffer_.size();
        }
        if (eof_) return !out.empty();
        buffer_.resize(kChunk);
        int n = gzread(static_cast<gzFile>(gz_), buffer_.data(), kChunk);
        if (n < 0) {
            int err = 0;
            const char* msg = gzerror(static_cast<gzFile>(gz_), &err);
            throw DataError("read error in " + path_ + ": " + (msg ? msg : "unknown"));
        }
        buffer_.resize(static_cast<std::size_t>(n));
        buf_pos_ = 0;
        if (n == 0) eof_ = true;
    }
}

bool NTriplesReader::next(Triple& out) {
    std::string line;
    while (read_line(line)) {
        ++line_;
        const char* p = line.c_str();
        const char* end = p + line.size();
        auto skip_ws = [&] {
            while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        };
        skip_ws();
        if (p == end || *p == '#') continue;

        auto parse_iri = [&](std::string& dst, const char* part) {
            if (p == end || *p != '<') fail(path_, line_, std::string("expected IRI for ") + part);
            const char* close = static_cast<const char*>(std::memchr(p, '>', end - p));
            if (!close) fail(path_, line_, std::string("unterminated IRI in ") + part);
            dst.assign(p + 1, close);
            p = close + 1;
        };

        parse_iri(out.subject, "subject");
        skip_ws();
        parse_iri(out.predicate, "predicate");
        skip_ws();

        if (p == end) fail(path_, line_, "missing object");
        if (*p == '<') {
            parse_iri(out.object, "object");
            out.object_is_literal = false;
        } else if (*p == '"') {
            ++p;
            out.object.clear();
            out.object_is_literal = true;
            bool closed = false;
            while (p < end) {
                char c = *p++;
                if (c == '"') {
                    closed = true;
                    break;
                }
                if (c != '\\') {
                    out.object.push_back(c);
                    continue;
                }
                if (p == end) fail(path_, line_, "dangling escape in literal");
                char e = *p++;
                switch (e) {
                    case 't': out.object.push_back('\t'); break;
                    case 'n': out.object.push_back('\n'); break;
                    case 'r': out.object.push_back('\r'); break;
                    case '"': out.object.push_back('"'); break;
                    case '\\': out.object.push_back('\\'); break;
                    case 'u':
                    case 'U': {
                        int digits = e == 'u' ? 4 : 8;
                        if (end - p < digits) fail(path_, line_, "truncated \\u escape");
                        std::uint32_t cp = 0;
                        for (int i = 0; i < digits; ++i) {
                            char d = *p++;
                            cp <<= 4;
                            if (d >= '0' && d <= '9') cp |= d - '0';
                            else if (d >= 'a' && d <= 'f') cp |= d - 'a' + 10;
                            else if (d >= 'A' && d <= 'F') cp |= d - 'A' + 10;
                            else fail(path_, line_, "bad hex digit in \\u escape");
                        }
                        append_utf8(out.object, cp);
                        break;
                    }
                    default: fail(path_, line_, std::string("unknown escape \\") + e);
                }
            }
            if (!closed) fail(path_, line_, "unterminated literal");
            // Optional language tag or datatype; both ignored.
            if (p < end && *p == '@') {
                ++p;
                while (p < end && *p != ' ' && *p != '\t') ++p;
            } else if (end - p >= 2 && p[0] == '^' && p[1] == '^') {
                p += 2;
                std::string ignored;
                parse_iri(ignored, "datatype");
            }
        } else {
            fail(path_, line_, "object must be an IRI or literal");
        }

        skip_ws();
        if (p == end || *p != '.') fail(path_, line_, "missing terminating '.'");
        ++p;
        skip_ws();
        if (p != end) fail(path_, line_, "trailing content after '.'");
        return true;
    }
    return false;
}

}  // namespace kgsim
