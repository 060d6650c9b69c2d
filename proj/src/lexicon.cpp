#include "sentra/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "sentra/errors.hpp"

namespace sentra {

namespace {

int count_words(const std::string& term) {
    return 1 + int(std::count(term.begin(), term.end(), ' '));
}

std::string lowercase_ascii(std::string s) {
    for (char& c : s) {
        if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
    }
    return s;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool is_word_byte(unsigned char c) {
    // non-ASCII bytes pass through so UTF-8 words survive intact
    return std::isalnum(c) || c >= 0x80;
}

}  // namespace

Lexicon::Lexicon(std::unordered_map<std::string, int> entries, std::string name)
    : entries_(std::move(entries)), name_(std::move(name)) {
    for (const auto& [term, v] : entries_) {
        (void)v;
        max_phrase_words_ = std::max(max_phrase_words_, count_words(term));
    }
}

std::optional<int> Lexicon::valence(const std::string& term) const {
    auto it = entries_.find(term);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> Lexicon::terms_with_valence(int valence, bool single_words_only) const {
    std::vector<std::string> out;
    for (const auto& [term, v] : entries_) {
        if (v != valence) continue;
        if (single_words_only && count_words(term) > 1) continue;
        out.push_back(term);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Lexicon load_lexicon(const std::string& raw_text, const std::string& name) {
    std::unordered_map<std::string, int> entries;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= raw_text.size()) {
        size_t nl = raw_text.find('\n', pos);
        std::string line = raw_text.substr(pos, nl == std::string::npos ? std::string::npos
                                                                        : nl - pos);
        pos = nl == std::string::npos ? raw_text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        size_t tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError("missing tab separator", line_no);
        std::string term = lowercase_ascii(trim(line.substr(0, tab)));
        std::string score_str = trim(line.substr(tab + 1));
        if (term.empty()) throw ParseError("empty term", line_no);

        char* end = nullptr;
        long v = std::strtol(score_str.c_str(), &end, 10);
        if (score_str.empty() || end == score_str.c_str() || *end != '\0') {
            throw ParseError("non-integer score '" + score_str + "'", line_no);
        }
        if (v < -5 || v > 5) {
            throw ParseError("score " + std::to_string(v) + " outside [-5, 5]", line_no);
        }
        entries[term] = int(v);  // last occurrence wins
    }
    if (entries.empty()) throw EmptyLexicon();
    return Lexicon(std::move(entries), name);
}

std::vector<std::string> tokenize(const std::string& text, const Lexicon& lexicon) {
    // pass 1: lowercase + strip punctuation, keeping ' and - only between
    // word characters
    std::string clean;
    clean.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        unsigned char c = (unsigned char)text[i];
        if (is_word_byte(c)) {
            clean.push_back(char(std::tolower(c)));
        } else if ((c == '\'' || c == '-') && i > 0 && i + 1 < text.size() &&
                   is_word_byte((unsigned char)text[i - 1]) &&
                   is_word_byte((unsigned char)text[i + 1])) {
            clean.push_back(char(c));
        } else {
            clean.push_back(' ');
        }
    }

    std::vector<std::string> words;
    size_t i = 0;
    while (i < clean.size()) {
        while (i < clean.size() && clean[i] == ' ') ++i;
        size_t j = i;
        while (j < clean.size() && clean[j] != ' ') ++j;
        if (j > i) words.push_back(clean.substr(i, j - i));
        i = j;
    }

    // pass 2: greedy left-to-right longest-phrase merge
    const int max_words = std::max(1, lexicon.max_phrase_words());
    if (max_words == 1) return words;

    std::vector<std::string> terms;
    size_t k = 0;
    while (k < words.size()) {
        size_t best = 1;
        std::string merged = words[k];
        std::string candidate = words[k];
        for (size_t len = 2; len <= size_t(max_words) && k + len <= words.size(); ++len) {
            candidate += ' ';
            candidate += words[k + len - 1];
            if (lexicon.contains(candidate)) {
                best = len;
                merged = candidate;
            }
        }
        terms.push_back(merged);
        k += best;
    }
    return terms;
}

double score_headline(const Headline& headline, const Lexicon& lexicon) {
    const auto terms = tokenize(headline.text, lexicon);
    if (terms.empty()) throw EmptyHeadline();
    double sum = 0.0;
    for (const auto& t : terms) {
        sum += double(lexicon.valence(t).value_or(0));
    }
    return sum / double(terms.size());
}

PeriodSentiment period_sentiment(const std::vector<Headline>& headlines,
                                 const DateRange& window, const Lexicon& lexicon) {
    PeriodSentiment out;
    out.start_date = window.start;
    out.end_date = window.end;
    double sum = 0.0;
    size_t count = 0;
    for (const auto& h : headlines) {
        if (!window.contains(h.date)) continue;
        if (tokenize(h.text, lexicon).empty()) continue;
        sum += score_headline(h, lexicon);
        ++count;
    }
    out.headline_count = count;
    if (count > 0) out.score = sum / double(count);
    return out;
}

}  // namespace sentra
