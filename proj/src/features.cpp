#include "miftah/features.hpp"

#include <algorithm>

namespace miftah {
namespace {

// Applies fn to each space-separated word of an abstract phrase.
template <typename Fn>
void for_each_abstract_word(std::string_view abstract, Fn&& fn) {
  std::size_t start = 0;
  while (start <= abstract.size()) {
    std::size_t space = abstract.find(' ', start);
    std::size_t end = space == std::string_view::npos ? abstract.size() : space;
    if (end > start) fn(abstract.substr(start, end - start));
    if (space == std::string_view::npos) break;
    start = space + 1;
  }
}

double centered_square(int index, int count) {
  if (count <= 1) return 1.0;
  double t = static_cast<double>(index) / static_cast<double>(count - 1);
  double v = 2.0 * t - 1.0;
  return v * v;
}

}  // namespace

DocumentFrequencyIndex build_frequency_index(
    const std::vector<CandidateOccurrence>& candidates) {
  DocumentFrequencyIndex index;
  std::unordered_map<std::string, int> word_counts;
  for (const CandidateOccurrence& candidate : candidates) {
    int freq = ++index.phrase_freq[candidate.abstract];
    index.max_phrase_freq = std::max(index.max_phrase_freq, freq);
    for_each_abstract_word(candidate.abstract, [&](std::string_view word) {
      ++word_counts[std::string(word)];
    });
  }
  int max_word_count = 0;
  for (const auto& [word, count] : word_counts) {
    max_word_count = std::max(max_word_count, count);
  }
  if (max_word_count > 0) {
    for (const auto& [word, count] : word_counts) {
      index.word_freq.emplace(word, static_cast<double>(count) /
                                        static_cast<double>(max_word_count));
    }
  }
  return index;
}

double npw(int length) { return 1.0 / static_cast<double>(length); }

double nplen(int length, int word_count) {
  return static_cast<double>(length) / static_cast<double>(word_count);
}

double npl(int start_word_index, int word_count) {
  return centered_square(start_word_index, word_count);
}

double nsl(int sentence_index, int sentence_count) {
  return centered_square(sentence_index, sentence_count);
}

double prf(const CandidateOccurrence& candidate,
           const DocumentFrequencyIndex& index) {
  auto it = index.phrase_freq.find(candidate.abstract);
  if (it == index.phrase_freq.end() || index.max_phrase_freq == 0) return 0.0;
  return static_cast<double>(it->second) /
         static_cast<double>(index.max_phrase_freq);
}

double wrf(const CandidateOccurrence& candidate,
           const DocumentFrequencyIndex& index) {
  double best = 0.0;
  for_each_abstract_word(candidate.abstract, [&](std::string_view word) {
    auto it = index.word_freq.find(std::string(word));
    if (it != index.word_freq.end()) best = std::max(best, it->second);
  });
  return best;
}

double scv(const Sentence& sentence) {
  return sentence.contains_verb ? 0.0 : 1.0;
}

double iit(const Sentence& sentence) {
  return sentence.is_question ? 1.0 : 0.0;
}

bool mark_is_key(const CandidateOccurrence& candidate,
                 const GoldAbstractSet& gold_abstracts) {
  return gold_abstracts.contains(candidate.abstract);
}

std::vector<FeatureVector> build_feature_vectors(
    const AnalyzedDocument& doc,
    const std::vector<CandidateOccurrence>& candidates,
    const GoldAbstractSet* gold) {
  DocumentFrequencyIndex index = build_frequency_index(candidates);
  std::vector<FeatureVector> vectors;
  vectors.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const CandidateOccurrence& candidate = candidates[i];
    const Sentence& sentence = doc.sentences[candidate.sentence_index];

    FeatureVector v;
    v.candidate_index = i;
    v.x1_npw = npw(candidate.length);
    v.x2_nplen = nplen(candidate.length, sentence.word_count());
    v.x3_npl = npl(candidate.start_word_index, sentence.word_count());
    v.x4_nsl = nsl(candidate.sentence_index, doc.sentence_count());
    v.x5_prf = prf(candidate, index);
    v.x6_wrf = wrf(candidate, index);
    v.x7_scv = scv(sentence);
    v.x8_iit = iit(sentence);
    if (gold != nullptr) v.is_key = mark_is_key(candidate, *gold);
    vectors.push_back(v);
  }
  return vectors;
}

}  // namespace miftah
