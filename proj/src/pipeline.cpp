#include "miftah/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "miftah/errors.hpp"

namespace miftah {
namespace {

// Orders two occurrences by document position, then by shorter (and, as
// a final deterministic resort, lexicographically smaller) surface.
bool position_before(const CandidateOccurrence& lhs,
                     const CandidateOccurrence& rhs) {
  if (lhs.sentence_index != rhs.sentence_index) {
    return lhs.sentence_index < rhs.sentence_index;
  }
  if (lhs.start_word_index != rhs.start_word_index) {
    return lhs.start_word_index < rhs.start_word_index;
  }
  if (lhs.surface.size() != rhs.surface.size()) {
    return lhs.surface.size() < rhs.surface.size();
  }
  return lhs.surface < rhs.surface;
}

struct ScoredGroup {
  const CandidateOccurrence* best = nullptr;
  double score = 0.0;
};

std::vector<ExtractedKeyphrase> rank_occurrences(
    const std::vector<CandidateOccurrence>& candidates,
    const std::vector<double>& scores, int n_requested) {
  // Best occurrence per abstract form.
  std::unordered_map<std::string_view, ScoredGroup> groups;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    ScoredGroup& group = groups[candidates[i].abstract];
    if (group.best == nullptr || scores[i] > group.score ||
        (scores[i] == group.score &&
         position_before(candidates[i], *group.best))) {
      group.best = &candidates[i];
      group.score = scores[i];
    }
  }

  std::vector<ScoredGroup> ranked;
  ranked.reserve(groups.size());
  for (const auto& [abstract, group] : groups) ranked.push_back(group);
  std::sort(ranked.begin(), ranked.end(),
            [](const ScoredGroup& lhs, const ScoredGroup& rhs) {
              if (lhs.score != rhs.score) return lhs.score > rhs.score;
              if (!position_before(*lhs.best, *rhs.best) &&
                  !position_before(*rhs.best, *lhs.best)) {
                return lhs.best->abstract < rhs.best->abstract;
              }
              return position_before(*lhs.best, *rhs.best);
            });

  if (static_cast<int>(ranked.size()) > n_requested) {
    ranked.resize(static_cast<std::size_t>(n_requested));
  }
  std::vector<ExtractedKeyphrase> result;
  result.reserve(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    result.push_back({ranked[i].best->surface, ranked[i].best->abstract,
                      ranked[i].score, static_cast<int>(i) + 1});
  }
  return result;
}

std::vector<double> score_candidates(
    const LdaModel& model, const std::vector<CandidateOccurrence>& candidates,
    const std::vector<FeatureVector>& vectors) {
  std::vector<double> scores(candidates.size(), 0.0);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    scores[i] = score(model, project_features(model, vectors[i]));
  }
  return scores;
}

}  // namespace

GoldAbstractSet gold_abstracts(const Lexicon& lexicon,
                               const std::vector<std::string>& phrases) {
  GoldAbstractSet set;
  for (const std::string& phrase : phrases) {
    std::string abstract = phrase_abstract(lexicon, phrase);
    if (!abstract.empty()) set.insert(std::move(abstract));
  }
  return set;
}

DocFeatures featurize_document(const Lexicon& lexicon,
                               const CorpusDocument& doc, bool with_labels) {
  DocFeatures out;
  out.doc = analyze_document(doc.id, doc.text, lexicon);
  out.candidates = extract_candidates(out.doc);
  if (!with_labels) {
    out.vectors = build_feature_vectors(out.doc, out.candidates, nullptr);
    return out;
  }
  if (doc.gold_phrases.empty()) {
    throw Error(ErrorKind::kFormat,
                "document \"" + doc.id + "\" has no gold keyphrases");
  }
  GoldAbstractSet gold = gold_abstracts(lexicon, doc.gold_phrases);
  out.vectors = build_feature_vectors(out.doc, out.candidates, &gold);

  std::unordered_set<std::string_view> seen;
  for (const CandidateOccurrence& candidate : out.candidates) {
    seen.insert(candidate.abstract);
  }
  for (const std::string& phrase : doc.gold_phrases) {
    if (!seen.contains(phrase_abstract(lexicon, phrase))) {
      out.unmatched_gold.push_back(phrase);
    }
  }
  return out;
}

std::vector<DocFeatures> featurize_corpus(
    const Lexicon& lexicon, const std::vector<CorpusDocument>& corpus,
    bool with_labels, Exec exec) {
  std::vector<DocFeatures> slots(corpus.size());
  for_each_index(corpus.size(), exec, [&](std::size_t i) {
    slots[i] = featurize_document(lexicon, corpus[i], with_labels);
  });
  return slots;
}

TrainResult train_corpus(const Lexicon& lexicon,
                         const std::vector<CorpusDocument>& corpus,
                         const TrainOptions& options, Exec exec) {
  std::vector<DocFeatures> features =
      featurize_corpus(lexicon, corpus, /*with_labels=*/true, exec);

  TrainResult result;
  std::vector<FeatureVector> all;
  for (std::size_t d = 0; d < features.size(); ++d) {
    const DocFeatures& doc = features[d];
    result.summary.candidate_count += doc.vectors.size();
    for (const FeatureVector& v : doc.vectors) {
      (*v.is_key ? result.summary.positive_count
                 : result.summary.negative_count) += 1;
      all.push_back(v);
    }
    for (const std::string& phrase : doc.unmatched_gold) {
      result.summary.warnings.push_back("unmatchable gold \"" + phrase +
                                        "\" in document \"" +
                                        corpus[d].id + "\"");
    }
  }
  result.model = train_lda(all, options);
  return result;
}

TrainResult train_from_corpus(const std::vector<std::string>& doc_paths,
                              const std::vector<std::string>& gold_paths,
                              const Lexicon& lexicon,
                              const TrainOptions& options, Exec exec) {
  return train_corpus(lexicon, load_corpus(doc_paths, gold_paths), options,
                      exec);
}

std::vector<ExtractedKeyphrase> extract_keyphrases(std::string_view doc_text,
                                                   const Lexicon& lexicon,
                                                   const LdaModel& model,
                                                   int n_requested) {
  if (n_requested < 1) {
    throw Error(ErrorKind::kFormat, "n_requested must be at least 1");
  }
  AnalyzedDocument doc = analyze_document({}, doc_text, lexicon);
  std::vector<CandidateOccurrence> candidates = extract_candidates(doc);
  std::vector<FeatureVector> vectors =
      build_feature_vectors(doc, candidates, nullptr);
  std::vector<double> scores = score_candidates(model, candidates, vectors);
  return rank_occurrences(candidates, scores, n_requested);
}

std::vector<DocExtraction> extract_corpus(
    const Lexicon& lexicon, const LdaModel& model,
    const std::vector<CorpusDocument>& corpus, int n_requested, Exec exec) {
  std::vector<DocExtraction> slots(corpus.size());
  for_each_index(corpus.size(), exec, [&](std::size_t i) {
    slots[i] = {corpus[i].id,
                extract_keyphrases(corpus[i].text, lexicon, model,
                                   n_requested)};
  });
  return slots;
}

EvalResult precision_recall(const std::vector<ExtractedKeyphrase>& predicted,
                            const GoldAbstractSet& gold_abstracts,
                            int n_requested) {
  EvalResult result;
  result.n_requested = n_requested;
  for (const ExtractedKeyphrase& k : predicted) {
    (gold_abstracts.contains(k.abstract) ? result.a : result.b) += 1;
  }
  result.c = static_cast<int>(gold_abstracts.size()) - result.a;
  if (result.a + result.b > 0) {
    result.precision =
        static_cast<double>(result.a) / static_cast<double>(result.a + result.b);
  }
  if (result.a + result.c > 0) {
    result.recall =
        static_cast<double>(result.a) / static_cast<double>(result.a + result.c);
  }
  return result;
}

std::vector<EvalRow> evaluate_corpus_docs(
    const Lexicon& lexicon, const LdaModel& model,
    const std::vector<CorpusDocument>& corpus, const std::vector<int>& n_list,
    Exec exec) {
  if (n_list.empty()) {
    throw Error(ErrorKind::kFormat, "evaluation needs at least one cutoff");
  }
  int n_max = 0;
  for (int n : n_list) {
    if (n < 1) {
      throw Error(ErrorKind::kFormat, "evaluation cutoffs must be at least 1");
    }
    n_max = std::max(n_max, n);
  }
  for (const CorpusDocument& doc : corpus) {
    if (doc.gold_phrases.empty()) {
      throw Error(ErrorKind::kFormat,
                  "document \"" + doc.id + "\" has no gold keyphrases");
    }
  }

  // Full ranked list once per document; cutoffs are prefixes of it.
  std::vector<DocExtraction> extracted =
      extract_corpus(lexicon, model, corpus, n_max, exec);

  std::vector<EvalRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    EvalRow row;
    row.n = n;
    row.doc_count = static_cast<int>(corpus.size());
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      std::vector<ExtractedKeyphrase> prefix = extracted[d].keyphrases;
      if (static_cast<int>(prefix.size()) > n) {
        prefix.resize(static_cast<std::size_t>(n));
      }
      GoldAbstractSet gold = gold_abstracts(lexicon, corpus[d].gold_phrases);
      EvalResult eval = precision_recall(prefix, gold, n);
      row.mean_precision += eval.precision;
      row.mean_recall += eval.recall;
    }
    if (row.doc_count > 0) {
      row.mean_precision /= static_cast<double>(row.doc_count);
      row.mean_recall /= static_cast<double>(row.doc_count);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<EvalRow> evaluate_corpus(const std::vector<std::string>& doc_paths,
                                     const std::vector<std::string>& gold_paths,
                                     const Lexicon& lexicon,
                                     const LdaModel& model,
                                     const std::vector<int>& n_list,
                                     Exec exec) {
  return evaluate_corpus_docs(lexicon, model,
                              load_corpus(doc_paths, gold_paths), n_list,
                              exec);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorKind::kIo, "I/O failure while reading " + path);
  }
  return std::move(buffer).str();
}

std::vector<std::string> read_gold_file(const std::string& path) {
  std::string content = read_text_file(path);
  std::vector<std::string> phrases;
  std::istringstream stream(content);
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t");
    phrases.push_back(line.substr(begin, end - begin + 1));
  }
  if (phrases.empty()) {
    throw Error(ErrorKind::kFormat, "gold file has no keyphrases: " + path);
  }
  return phrases;
}

std::string path_stem(std::string_view path) {
  return std::filesystem::path(path).stem().string();
}

std::vector<CorpusDocument> load_corpus(
    const std::vector<std::string>& doc_paths,
    const std::vector<std::string>& gold_paths) {
  if (!gold_paths.empty() && gold_paths.size() != doc_paths.size()) {
    throw Error(ErrorKind::kFormat,
                "document/gold count mismatch (" +
                    std::to_string(doc_paths.size()) + " documents, " +
                    std::to_string(gold_paths.size()) + " gold files)");
  }
  std::vector<CorpusDocument> corpus;
  corpus.reserve(doc_paths.size());
  for (std::size_t i = 0; i < doc_paths.size(); ++i) {
    CorpusDocument doc;
    doc.id = path_stem(doc_paths[i]);
    doc.text = read_text_file(doc_paths[i]);
    if (!gold_paths.empty()) doc.gold_phrases = read_gold_file(gold_paths[i]);
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

}  // namespace miftah
