#ifndef MIFTAH_FEATURES_HPP_
#define MIFTAH_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "miftah/candidates.hpp"
#include "miftah/segmentation.hpp"

namespace miftah {

inline constexpr int kFeatureCount = 8;

// Canonical feature order; every vector, mask, and report uses it.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"};

using GoldAbstractSet = std::unordered_set<std::string>;

// The eight per-occurrence features, all in [0,1], plus the training
// label when gold keyphrases are supplied.
struct FeatureVector {
  double x1_npw = 0.0;
  double x2_nplen = 0.0;
  double x3_npl = 0.0;
  double x4_nsl = 0.0;
  double x5_prf = 0.0;
  double x6_wrf = 0.0;
  double x7_scv = 0.0;
  double x8_iit = 0.0;
  std::optional<bool> is_key;
  std::size_t candidate_index = 0;  // into the per-document candidate list

  std::array<double, kFeatureCount> as_array() const {
    return {x1_npw, x2_nplen, x3_npl, x4_nsl, x5_prf, x6_wrf, x7_scv, x8_iit};
  }
};

// Per-document frequency tables over the rule-accepted candidates.
struct DocumentFrequencyIndex {
  std::unordered_map<std::string, int> phrase_freq;  // abstract phrase -> n
  int max_phrase_freq = 0;
  // abstract word -> frequency normalized by the most repeated word
  std::unordered_map<std::string, double> word_freq;
};

DocumentFrequencyIndex build_frequency_index(
    const std::vector<CandidateOccurrence>& candidates);

// Feature formulas. Positions are 0-based; the quadratic position
// features peak at 1 on the first/last element and the denominators are
// chosen so the stated extremes hold exactly (degenerate single-element
// cases return 1).
double npw(int length);
double nplen(int length, int word_count);
double npl(int start_word_index, int word_count);
double nsl(int sentence_index, int sentence_count);
double prf(const CandidateOccurrence& candidate,
           const DocumentFrequencyIndex& index);
double wrf(const CandidateOccurrence& candidate,
           const DocumentFrequencyIndex& index);
double scv(const Sentence& sentence);
double iit(const Sentence& sentence);

// True iff the candidate's abstract phrase is one of the gold abstract
// phrases. Every occurrence is marked, not just one per abstract form.
bool mark_is_key(const CandidateOccurrence& candidate,
                 const GoldAbstractSet& gold_abstracts);

// One vector per occurrence, in candidate-list order; is_key is set iff
// gold is non-null.
std::vector<FeatureVector> build_feature_vectors(
    const AnalyzedDocument& doc,
    const std::vector<CandidateOccurrence>& candidates,
    const GoldAbstractSet* gold = nullptr);

}  // namespace miftah

#endif  // MIFTAH_FEATURES_HPP_
