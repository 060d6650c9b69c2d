#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sentra/date.hpp"

namespace sentra {

// Valence lexicon: lowercase term (word or multiword phrase) -> integer
// valence in [-5, 5]. Immutable after load; safe to share across threads.
class Lexicon {
public:
    Lexicon() = default;
    Lexicon(std::unordered_map<std::string, int> entries, std::string name);

    std::optional<int> valence(const std::string& term) const;
    bool contains(const std::string& term) const { return entries_.count(term) != 0; }
    size_t size() const { return entries_.size(); }
    const std::string& name() const { return name_; }
    // longest phrase length, in words, over all entries (>= 1 when non-empty)
    int max_phrase_words() const { return max_phrase_words_; }

    // terms with the given valence, sorted; single-word terms only when
    // single_words_only is set (used by the synthetic headline generator)
    std::vector<std::string> terms_with_valence(int valence, bool single_words_only) const;

private:
    std::unordered_map<std::string, int> entries_;
    std::string name_;
    int max_phrase_words_ = 0;
};

struct Headline {
    Date date;
    std::string source;
    std::string text;
};

// Aggregated headline valence over a date window. score is absent when the
// window held no scoreable headlines (never a fabricated zero).
struct PeriodSentiment {
    Date start_date;
    Date end_date;
    std::optional<double> score;
    size_t headline_count = 0;
};

// Parses "term<TAB>integer" lines (AFINN distribution format). Terms are
// lowercased; duplicate terms resolve last-wins; blank lines are skipped.
// Throws EmptyLexicon when nothing parses, ParseError on malformed lines.
Lexicon load_lexicon(const std::string& raw_text, const std::string& name = "lexicon");

// Lowercases, strips punctuation (intra-word apostrophes/hyphens survive),
// splits on whitespace, then greedily merges adjacent tokens left-to-right
// into the longest phrase present in the lexicon.
std::vector<std::string> tokenize(const std::string& text, const Lexicon& lexicon);

// Mean valence over the headline's terms; terms absent from the lexicon
// score 0 but still count in the denominator. Throws EmptyHeadline when
// tokenization yields nothing.
double score_headline(const Headline& headline, const Lexicon& lexicon);

// Mean of score_headline over headlines dated inside the window. Headlines
// with no tokens are skipped rather than counted.
PeriodSentiment period_sentiment(const std::vector<Headline>& headlines,
                                 const DateRange& window, const Lexicon& lexicon);

}  // namespace sentra
