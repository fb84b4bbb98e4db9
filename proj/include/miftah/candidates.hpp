#ifndef MIFTAH_CANDIDATES_HPP_
#define MIFTAH_CANDIDATES_HPP_

#include <span>
#include <string>
#include <vector>

#include "miftah/segmentation.hpp"
#include "miftah/word_class.hpp"

namespace miftah {

// One rule-accepted n-gram occurrence, n in {1,2,3}.
struct CandidateOccurrence {
  std::string doc_id;
  int sentence_index = 0;
  int start_word_index = 0;
  int length = 0;
  std::string surface;   // original words joined by single spaces
  std::string abstract;  // abstract forms joined by single spaces
  std::vector<WordClass> classes;

  bool operator==(const CandidateOccurrence&) const = default;
};

struct NgramWindow {
  int start = 0;
  int length = 0;
};

// Membership in the positional class sets of the phrase rules:
// START = some sorts of nouns; END = START plus time-noun,
// augmented-noun, adjective, adverb; MIDDLE = END plus count-noun,
// conjunction, preposition, comparison.
bool can_start_phrase(WordClass c);
bool can_end_phrase(WordClass c);
bool can_middle_phrase(WordClass c);

// All contiguous windows of length 1..3, ordered by start then length.
// Windows never cross the sentence boundary.
std::vector<NgramWindow> generate_ngrams(const Sentence& sentence);

// Accepts a class sequence of length 1..3 per the three phrase rules.
bool rule_filter(std::span<const WordClass> classes);

// Every rule-accepted window of the document, in (sentence, start,
// length) order.
std::vector<CandidateOccurrence> extract_candidates(
    const AnalyzedDocument& doc);

// Abstract form of a free-standing phrase: the words' abstract forms
// joined by single spaces, after the same normalization and analysis a
// document goes through. Used for gold keyphrases.
std::string phrase_abstract(const Lexicon& lexicon, std::string_view phrase);

}  // namespace miftah

#endif  // MIFTAH_CANDIDATES_HPP_
