#include "miftah/segmentation.hpp"

#include <utility>

#include "miftah/text.hpp"

namespace miftah {
namespace {

bool is_sentence_delimiter(char32_t cp) {
  switch (cp) {
    case ',':
    case ';':
    case ':':
    case '.':
    case '?':
    case '!':
    case text::kArabicComma:
    case text::kArabicSemicolon:
    case text::kArabicQuestion:
      return true;
    default:
      return false;
  }
}

bool is_question_delimiter(char32_t cp) {
  return cp == '?' || cp == text::kArabicQuestion;
}

std::string_view trim_spaces(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string normalize_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < raw.size();) {
    auto [cp, len] = text::decode_codepoint(raw, i);
    if (cp == text::kTatweel) {
      i += len;
      continue;
    }
    if (text::is_ascii_space(cp)) {
      pending_space = true;
      i += len;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.append(raw.substr(i, len));
    i += len;
  }
  return out;
}

std::vector<RawSpan> segment_sentences(std::string_view normalized) {
  std::vector<RawSpan> spans;
  std::size_t span_start = 0;

  auto close_span = [&](std::size_t end, bool question) {
    std::string_view span = trim_spaces(
        normalized.substr(span_start, end - span_start));
    if (!span.empty()) spans.push_back({std::string(span), question});
  };

  for (std::size_t i = 0; i < normalized.size();) {
    auto [cp, len] = text::decode_codepoint(normalized, i);
    bool split = is_sentence_delimiter(cp);
    if (cp == '-') {
      // Hyphen splits only standalone; "عربي-إنجليزي" stays one token.
      bool space_before = i == 0 || normalized[i - 1] == ' ';
      bool space_after =
          i + len >= normalized.size() || normalized[i + len] == ' ';
      split = space_before && space_after;
    }
    if (split) {
      close_span(i, is_question_delimiter(cp));
      span_start = i + len;
    }
    i += len;
  }
  close_span(normalized.size(), false);
  return spans;
}

AnalyzedDocument tokenize_and_analyze(const std::vector<RawSpan>& spans,
                                      const Lexicon& lexicon,
                                      std::string doc_id) {
  AnalyzedDocument doc;
  doc.id = std::move(doc_id);
  for (const RawSpan& span : spans) {
    Sentence sentence;
    sentence.index = static_cast<int>(doc.sentences.size());
    sentence.is_question = span.question_terminated;

    std::string_view rest = span.text;
    while (!rest.empty()) {
      std::size_t space = rest.find(' ');
      std::string_view word =
          space == std::string_view::npos ? rest : rest.substr(0, space);
      rest = space == std::string_view::npos ? std::string_view{}
                                             : rest.substr(space + 1);
      if (word.empty()) continue;

      Token token;
      token.surface = std::string(word);
      token.entry = lexicon.analyze(word);
      token.sentence_index = sentence.index;
      token.word_index = sentence.word_count();
      if (is_verb_class(token.entry.word_class)) sentence.contains_verb = true;
      if (token.entry.word_class == WordClass::kQuestionWord)
        sentence.is_question = true;
      sentence.tokens.push_back(std::move(token));
    }

    if (!sentence.tokens.empty()) doc.sentences.push_back(std::move(sentence));
  }
  // Re-number in case an all-space span was dropped.
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    doc.sentences[s].index = static_cast<int>(s);
    for (Token& token : doc.sentences[s].tokens) {
      token.sentence_index = static_cast<int>(s);
    }
  }
  return doc;
}

AnalyzedDocument analyze_document(std::string doc_id, std::string_view raw,
                                  const Lexicon& lexicon) {
  return tokenize_and_analyze(segment_sentences(normalize_text(raw)), lexicon,
                              std::move(doc_id));
}

}  // namespace miftah
