#ifndef MIFTAH_WORD_CLASS_HPP_
#define MIFTAH_WORD_CLASS_HPP_

#include <optional>
#include <string_view>

namespace miftah {

// Fine-grained lexical categories. The noun subtypes matter: the
// candidate rules admit different subsets at the start, middle, and end
// of a phrase.
enum class WordClass {
  kGeneralNoun,
  kCountNoun,
  kPlaceNoun,
  kTimeNoun,
  kProperNoun,
  kDeclinedNoun,
  kAugmentedNoun,
  kAdjective,
  kAdverb,
  kPastVerb,
  kPresentVerb,
  kIgnoreVerb,
  kConjunction,
  kPreposition,
  kComparison,
  kQuestionWord,
  kPunctuation,
  kUnknown,
};

inline constexpr int kWordClassCount = 18;

std::string_view word_class_name(WordClass c);

// Strict tag parse; unrecognized tags are rejected rather than guessed.
std::optional<WordClass> parse_word_class(std::string_view tag);

inline bool is_verb_class(WordClass c) {
  return c == WordClass::kPastVerb || c == WordClass::kPresentVerb ||
         c == WordClass::kIgnoreVerb;
}

}  // namespace miftah

#endif  // MIFTAH_WORD_CLASS_HPP_
