#ifndef MIFTAH_PIPELINE_HPP_
#define MIFTAH_PIPELINE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "miftah/candidates.hpp"
#include "miftah/features.hpp"
#include "miftah/lexicon.hpp"
#include "miftah/model.hpp"
#include "miftah/parallel.hpp"
#include "miftah/segmentation.hpp"

namespace miftah {

// One deduplicated, ranked keyphrase. surface comes from the
// highest-scoring occurrence of the abstract form.
struct ExtractedKeyphrase {
  std::string surface;
  std::string abstract;
  double score = 0.0;
  int rank = 0;  // 1-based

  bool operator==(const ExtractedKeyphrase&) const = default;
};

// Confusion counts of one document at one cutoff: a = agreed keyphrases,
// b = predicted only, c = gold only.
struct EvalResult {
  int a = 0;
  int b = 0;
  int c = 0;
  double precision = 0.0;  // a/(a+b), 0 when the denominator is 0
  double recall = 0.0;     // a/(a+c), 0 when the denominator is 0
  int n_requested = 0;
};

// One row of the evaluation table: unweighted means across documents.
struct EvalRow {
  int n = 0;
  double mean_precision = 0.0;
  double mean_recall = 0.0;
  int doc_count = 0;
};

struct TrainingSummary {
  std::size_t candidate_count = 0;
  std::size_t positive_count = 0;
  std::size_t negative_count = 0;
  std::vector<std::string> warnings;  // e.g. unmatchable gold phrases
};

struct TrainResult {
  LdaModel model;
  TrainingSummary summary;
};

// An in-memory corpus document. gold_phrases holds the raw keyphrase
// lines; leave it empty for unlabeled extraction input.
struct CorpusDocument {
  std::string id;
  std::string text;
  std::vector<std::string> gold_phrases;
};

// Everything computed per document before training: the analysis, the
// rule-accepted candidates, their feature vectors, and the gold phrases
// whose abstract form matched no candidate.
struct DocFeatures {
  AnalyzedDocument doc;
  std::vector<CandidateOccurrence> candidates;
  std::vector<FeatureVector> vectors;
  std::vector<std::string> unmatched_gold;
};

// Abstract forms of raw gold phrases, analyzed through the same lexicon
// as document text.
GoldAbstractSet gold_abstracts(const Lexicon& lexicon,
                               const std::vector<std::string>& phrases);

// Analyze + candidates + features for one document. Labels are attached
// iff with_labels; that requires a non-empty gold_phrases list.
DocFeatures featurize_document(const Lexicon& lexicon,
                               const CorpusDocument& doc, bool with_labels);

// Per-document featurization in document order. Parallel execution
// yields bit-identical results to serial: each document writes only its
// own slot.
std::vector<DocFeatures> featurize_corpus(const Lexicon& lexicon,
                                          const std::vector<CorpusDocument>& corpus,
                                          bool with_labels,
                                          Exec exec = Exec::kParallel);

// Featurize (parallel), concatenate vectors in document order, fit the
// discriminant (serial). Throws Error{kFormat} for a document without
// gold phrases and Error{kDegenerate} for unusable label distributions.
TrainResult train_corpus(const Lexicon& lexicon,
                         const std::vector<CorpusDocument>& corpus,
                         const TrainOptions& options = {},
                         Exec exec = Exec::kParallel);

// Path-list front end for train_corpus: doc_paths[i] pairs with
// gold_paths[i]; list lengths must match. Document ids are file stems.
TrainResult train_from_corpus(const std::vector<std::string>& doc_paths,
                              const std::vector<std::string>& gold_paths,
                              const Lexicon& lexicon,
                              const TrainOptions& options = {},
                              Exec exec = Exec::kParallel);

// Scores every candidate occurrence, keeps the best occurrence per
// abstract form, orders groups by score (ties: earlier position, then
// shorter surface), and returns at most n_requested of them.
std::vector<ExtractedKeyphrase> extract_keyphrases(std::string_view doc_text,
                                                   const Lexicon& lexicon,
                                                   const LdaModel& model,
                                                   int n_requested);

struct DocExtraction {
  std::string doc_id;
  std::vector<ExtractedKeyphrase> keyphrases;
};

// extract_keyphrases over a corpus, output in input order regardless of
// execution mode.
std::vector<DocExtraction> extract_corpus(const Lexicon& lexicon,
                                          const LdaModel& model,
                                          const std::vector<CorpusDocument>& corpus,
                                          int n_requested,
                                          Exec exec = Exec::kParallel);

// Confusion counts and P/R of one prediction list against one gold set.
EvalResult precision_recall(const std::vector<ExtractedKeyphrase>& predicted,
                            const GoldAbstractSet& gold_abstracts,
                            int n_requested);

// Mean P/R per cutoff across a labeled corpus. Each document's full
// ranked list is computed once and sliced per n.
std::vector<EvalRow> evaluate_corpus_docs(const Lexicon& lexicon,
                                          const LdaModel& model,
                                          const std::vector<CorpusDocument>& corpus,
                                          const std::vector<int>& n_list = {5, 7, 10},
                                          Exec exec = Exec::kParallel);

// Path-list front end, mirroring train_from_corpus.
std::vector<EvalRow> evaluate_corpus(const std::vector<std::string>& doc_paths,
                                     const std::vector<std::string>& gold_paths,
                                     const Lexicon& lexicon,
                                     const LdaModel& model,
                                     const std::vector<int>& n_list = {5, 7, 10},
                                     Exec exec = Exec::kParallel);

// Whole-file read; throws Error{kIo} with the path on failure.
std::string read_text_file(const std::string& path);

// Gold-keyphrase file: UTF-8, one keyphrase per line; blank lines are
// ignored. Throws Error{kFormat} when no keyphrase remains.
std::vector<std::string> read_gold_file(const std::string& path);

// Filename without directory or final extension: "a/b/doc1.txt" -> "doc1".
std::string path_stem(std::string_view path);

// Pairs doc_paths[i] with gold_paths[i] (or no gold when gold_paths is
// empty) and reads everything. Throws Error{kFormat} on a length
// mismatch.
std::vector<CorpusDocument> load_corpus(const std::vector<std::string>& doc_paths,
                                        const std::vector<std::string>& gold_paths);

}  // namespace miftah

#endif  // MIFTAH_PIPELINE_HPP_
