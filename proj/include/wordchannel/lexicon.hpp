#pragma once
// Word/character frequency lexicon: a normalized unigram distribution with
// entropy and surprisal queries. Immutable after construction.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wordchannel/common.hpp"

namespace wordchannel {

struct LexiconEntry {
    std::string word;
    double prob = 0.0;
};

class Lexicon {
public:
    Lexicon(std::vector<LexiconEntry> items, std::string language_tag,
            std::string source_id)
        : items_(std::move(items)),
          language_tag_(std::move(language_tag)),
          source_id_(std::move(source_id)) {
        double total = 0.0;
        for (std::size_t i = 0; i < items_.size(); ++i) {
            const auto& e = items_[i];
            if (e.word.empty()) throw data_error("lexicon: empty word at index " + std::to_string(i));
            if (!(e.prob > 0.0)) throw data_error("lexicon: non-positive probability for '" + e.word + "'");
            if (!index_.emplace(e.word, i).second)
                throw data_error("lexicon: duplicate word '" + e.word + "'");
            total += e.prob;
        }
        if (items_.empty()) throw data_error("lexicon: no entries");
        if (std::abs(total - 1.0) > 1e-9)
            throw data_error("lexicon: probabilities sum to " + std::to_string(total));
    }

    std::size_t size() const { return items_.size(); }
    const std::vector<LexiconEntry>& items() const { return items_; }
    const std::string& word(std::size_t i) const { return items_[i].word; }
    double prob(std::size_t i) const { return items_[i].prob; }
    const std::string& language_tag() const { return language_tag_; }
    const std::string& source_id() const { return source_id_; }

    bool contains(std::string_view w) const { return index_.find(std::string(w)) != index_.end(); }

    std::size_t index_of(std::string_view w) const {
        auto it = index_.find(std::string(w));
        if (it == index_.end())
            throw data_error("lexicon: out-of-vocabulary word '" + std::string(w) + "'");
        return it->second;
    }

private:
    std::vector<LexiconEntry> items_;
    std::string language_tag_;
    std::string source_id_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Unconditional entropy -sum p ln p, in nats.
inline double unigram_entropy(const Lexicon& lex) {
    double h = 0.0;
    for (const auto& e : lex.items()) h -= e.prob * std::log(e.prob);
    return h;
}

// Information content -ln p(w), in nats. Unknown words are errors; the
// unigram MLE is deliberately unsmoothed.
inline double surprisal(const Lexicon& lex, std::string_view w) {
    return -std::log(lex.prob(lex.index_of(w)));
}

namespace detail {

inline bool is_comment_or_blank(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

}  // namespace detail

// Parse a frequency table: one `word<TAB>count` record per line, UTF-8,
// '#'-prefixed comment lines ignored. Records with count <= min_count are
// dropped; the rest are renormalized and sorted by descending probability,
// ties broken lexicographically.
inline Lexicon parse_lexicon(std::string_view text, double min_count,
                             std::string language_tag = "und",
                             std::string source_id = "inline") {
    std::vector<std::pair<std::string, double>> raw;
    std::unordered_map<std::string, std::size_t> seen;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;
        if (line.ends_with('\r')) line.remove_suffix(1);
        if (detail::is_comment_or_blank(line)) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw data_error("lexicon line " + std::to_string(lineno) + ": expected word<TAB>count");
        std::string word(line.substr(0, tab));
        const std::string count_str(line.substr(tab + 1));
        char* end = nullptr;
        const double count = std::strtod(count_str.c_str(), &end);
        if (end == count_str.c_str() || count < 0.0 || !std::isfinite(count))
            throw data_error("lexicon line " + std::to_string(lineno) + ": bad count '" + count_str + "'");
        if (word.empty())
            throw data_error("lexicon line " + std::to_string(lineno) + ": empty word");
        if (!seen.emplace(word, lineno).second)
            throw data_error("lexicon: duplicate word '" + word + "' at line " + std::to_string(lineno));
        raw.emplace_back(std::move(word), count);
    }

    std::vector<LexiconEntry> entries;
    double total = 0.0;
    for (auto& [word, count] : raw) {
        if (count > min_count) {
            entries.push_back({std::move(word), count});
            total += count;
        }
    }
    if (entries.empty())
        throw data_error("lexicon: no entries above min_count=" + std::to_string(min_count));
    for (auto& e : entries) e.prob /= total;
    std::sort(entries.begin(), entries.end(), [](const LexiconEntry& a, const LexiconEntry& b) {
        if (a.prob != b.prob) return a.prob > b.prob;
        return a.word < b.word;
    });
    return Lexicon(std::move(entries), std::move(language_tag), std::move(source_id));
}

inline Lexicon load_lexicon(const std::string& path, double min_count = 0.0,
                            std::string language_tag = "und") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("lexicon: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_lexicon(buf.str(), min_count, std::move(language_tag), path);
}

// Serialize as word<TAB>probability with full double precision, so that a
// load/save/load round trip reproduces probabilities to 1e-12.
inline std::string serialize_lexicon(const Lexicon& lex) {
    std::string out;
    out.reserve(lex.size() * 24);
    char buf[64];
    for (const auto& e : lex.items()) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.prob);
        out += e.word;
        out += '\t';
        out += buf;
        out += '\n';
    }
    return out;
}

inline void save_lexicon(const Lexicon& lex, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("lexicon: cannot write '" + path + "'");
    out << serialize_lexicon(lex);
}

}  // namespace wordchannel
