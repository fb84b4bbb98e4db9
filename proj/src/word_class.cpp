#include "miftah/word_class.hpp"

#include <array>
#include <utility>

namespace miftah {
namespace {

constexpr std::array<std::pair<WordClass, std::string_view>, kWordClassCount>
    kTags = {{
        {WordClass::kGeneralNoun, "general-noun"},
        {WordClass::kCountNoun, "count-noun"},
        {WordClass::kPlaceNoun, "place-noun"},
        {WordClass::kTimeNoun, "time-noun"},
        {WordClass::kProperNoun, "proper-noun"},
        {WordClass::kDeclinedNoun, "declined-noun"},
        {WordClass::kAugmentedNoun, "augmented-noun"},
        {WordClass::kAdjective, "adjective"},
        {WordClass::kAdverb, "adverb"},
        {WordClass::kPastVerb, "past-verb"},
        {WordClass::kPresentVerb, "present-verb"},
        {WordClass::kIgnoreVerb, "ignore-verb"},
        {WordClass::kConjunction, "conjunction"},
        {WordClass::kPreposition, "preposition"},
        {WordClass::kComparison, "comparison"},
        {WordClass::kQuestionWord, "question-word"},
        {WordClass::kPunctuation, "punctuation"},
        {WordClass::kUnknown, "unknown"},
    }};

}  // namespace

std::string_view word_class_name(WordClass c) {
  for (const auto& [tag, name] : kTags) {
    if (tag == c) return name;
  }
  return "unknown";
}

std::optional<WordClass> parse_word_class(std::string_view tag) {
  for (const auto& [value, name] : kTags) {
    if (name == tag) return value;
  }
  return std::nullopt;
}

}  // namespace miftah
