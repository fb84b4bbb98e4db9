#include "miftah/candidates.hpp"

#include "miftah/text.hpp"

namespace miftah {

bool can_start_phrase(WordClass c) {
  switch (c) {
    case WordClass::kGeneralNoun:
    case WordClass::kPlaceNoun:
    case WordClass::kProperNoun:
    case WordClass::kDeclinedNoun:
      return true;
    default:
      return false;
  }
}

bool can_end_phrase(WordClass c) {
  switch (c) {
    case WordClass::kTimeNoun:
    case WordClass::kAugmentedNoun:
    case WordClass::kAdjective:
    case WordClass::kAdverb:
      return true;
    default:
      return can_start_phrase(c);
  }
}

bool can_middle_phrase(WordClass c) {
  switch (c) {
    case WordClass::kCountNoun:
    case WordClass::kConjunction:
    case WordClass::kPreposition:
    case WordClass::kComparison:
      return true;
    default:
      return can_end_phrase(c);
  }
}

std::vector<NgramWindow> generate_ngrams(const Sentence& sentence) {
  std::vector<NgramWindow> windows;
  const int n = sentence.word_count();
  for (int start = 0; start < n; ++start) {
    for (int length = 1; length <= 3 && start + length <= n; ++length) {
      windows.push_back({start, length});
    }
  }
  return windows;
}

bool rule_filter(std::span<const WordClass> classes) {
  switch (classes.size()) {
    case 1:
      return can_start_phrase(classes[0]);
    case 2:
      return can_start_phrase(classes[0]) && can_end_phrase(classes[1]);
    case 3:
      return can_start_phrase(classes[0]) && can_middle_phrase(classes[1]) &&
             can_end_phrase(classes[2]);
    default:
      return false;
  }
}

std::vector<CandidateOccurrence> extract_candidates(
    const AnalyzedDocument& doc) {
  std::vector<CandidateOccurrence> candidates;
  for (const Sentence& sentence : doc.sentences) {
    for (const NgramWindow& window : generate_ngrams(sentence)) {
      WordClass classes[3];
      for (int k = 0; k < window.length; ++k) {
        classes[k] = sentence.tokens[window.start + k].entry.word_class;
      }
      if (!rule_filter({classes, static_cast<std::size_t>(window.length)}))
        continue;

      CandidateOccurrence candidate;
      candidate.doc_id = doc.id;
      candidate.sentence_index = sentence.index;
      candidate.start_word_index = window.start;
      candidate.length = window.length;
      candidate.classes.assign(classes, classes + window.length);
      for (int k = 0; k < window.length; ++k) {
        const Token& token = sentence.tokens[window.start + k];
        if (k > 0) {
          candidate.surface += ' ';
          candidate.abstract += ' ';
        }
        candidate.surface += token.surface;
        candidate.abstract += token.entry.abstract;
      }
      candidates.push_back(std::move(candidate));
    }
  }
  return candidates;
}

std::string phrase_abstract(const Lexicon& lexicon, std::string_view phrase) {
  std::string normalized = normalize_text(phrase);
  std::string abstract;
  std::string_view rest = normalized;
  while (!rest.empty()) {
    std::size_t space = rest.find(' ');
    std::string_view word =
        space == std::string_view::npos ? rest : rest.substr(0, space);
    rest = space == std::string_view::npos ? std::string_view{}
                                           : rest.substr(space + 1);
    if (word.empty()) continue;
    if (!abstract.empty()) abstract += ' ';
    abstract += lexicon.analyze(word).abstract;
  }
  return abstract;
}

}  // namespace miftah
