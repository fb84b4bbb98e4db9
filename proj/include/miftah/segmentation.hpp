#ifndef MIFTAH_SEGMENTATION_HPP_
#define MIFTAH_SEGMENTATION_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "miftah/lexicon.hpp"

namespace miftah {

struct Token {
  std::string surface;
  LexiconEntry entry;
  int sentence_index = 0;
  int word_index = 0;
};

struct Sentence {
  int index = 0;
  std::vector<Token> tokens;
  bool contains_verb = false;
  bool is_question = false;

  int word_count() const { return static_cast<int>(tokens.size()); }
};

struct AnalyzedDocument {
  std::string id;
  std::vector<Sentence> sentences;

  int sentence_count() const { return static_cast<int>(sentences.size()); }
};

// A raw sentence span between delimiters. question_terminated records
// whether the span was closed by an Arabic or Latin question mark.
struct RawSpan {
  std::string text;
  bool question_terminated = false;
};

// Removes tatweel and collapses whitespace runs to single spaces.
// Nothing else is touched.
std::string normalize_text(std::string_view raw);

// Splits normalized text on the sentence delimiters
// { , ; : . ، ؛ ؟ ? ! } plus standalone hyphen (whitespace or a text
// boundary on both sides). Delimiters are consumed; empty spans are
// dropped.
std::vector<RawSpan> segment_sentences(std::string_view normalized);

// Splits each span on spaces, analyzes every token through the lexicon,
// and assigns contiguous 0-based indices. Spans that produce no tokens
// are dropped.
AnalyzedDocument tokenize_and_analyze(const std::vector<RawSpan>& spans,
                                      const Lexicon& lexicon,
                                      std::string doc_id = {});

// normalize -> segment -> tokenize in one call.
AnalyzedDocument analyze_document(std::string doc_id, std::string_view raw,
                                  const Lexicon& lexicon);

}  // namespace miftah

#endif  // MIFTAH_SEGMENTATION_HPP_
