// miftah — supervised Arabic keyphrase extraction.
//
// Subcommands: train, extract, evaluate, anova. Data goes to standard
// output, diagnostics to standard error. Exit codes: 0 success, 1
// input/IO error, 2 statistical degeneracy.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "miftah/errors.hpp"
#include "miftah/model.hpp"
#include "miftah/pipeline.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDegenerate = 2;

std::string format_score(double value, bool precise) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), precise ? "%.17g" : "%.3f", value);
  return buffer;
}

// Expands a path argument: a directory becomes its *.<ext> files sorted
// by filename, a file stays as-is.
std::vector<std::string> expand_paths(const std::vector<std::string>& args,
                                      std::string_view extension) {
  std::vector<std::string> paths;
  for (const std::string& arg : args) {
    if (fs::is_directory(arg)) {
      std::vector<std::string> found;
      for (const fs::directory_entry& entry : fs::directory_iterator(arg)) {
        if (entry.is_regular_file() && entry.path().extension() == extension) {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      paths.insert(paths.end(), found.begin(), found.end());
    } else {
      paths.push_back(arg);
    }
  }
  return paths;
}

// Pairs every document with the gold file sharing its stem. Explicit
// same-length lists pair positionally instead.
void pair_by_stem(std::vector<std::string>& doc_paths,
                  std::vector<std::string>& gold_paths) {
  if (gold_paths.size() == doc_paths.size()) {
    bool aligned = true;
    for (std::size_t i = 0; i < doc_paths.size(); ++i) {
      if (miftah::path_stem(doc_paths[i]) != miftah::path_stem(gold_paths[i])) {
        aligned = false;
        break;
      }
    }
    if (aligned) return;
  }
  std::map<std::string, std::string> by_stem;
  for (const std::string& path : gold_paths) {
    by_stem.emplace(miftah::path_stem(path), path);
  }
  std::vector<std::string> paired;
  paired.reserve(doc_paths.size());
  for (const std::string& doc : doc_paths) {
    auto it = by_stem.find(miftah::path_stem(doc));
    if (it == by_stem.end()) {
      throw miftah::Error(miftah::ErrorKind::kFormat,
                          "no gold file for document: " + doc);
    }
    paired.push_back(it->second);
  }
  gold_paths = std::move(paired);
}

std::vector<int> parse_cutoffs(const std::string& spec) {
  std::vector<int> cutoffs;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::size_t end = comma == std::string::npos ? spec.size() : comma;
    std::string token = spec.substr(start, end - start);
    if (!token.empty()) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || value < 1) {
        throw miftah::Error(miftah::ErrorKind::kFormat,
                            "bad cutoff \"" + token + "\" in --n");
      }
      cutoffs.push_back(value);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (cutoffs.empty()) {
    throw miftah::Error(miftah::ErrorKind::kFormat, "empty --n list");
  }
  return cutoffs;
}

struct RunConfig {
  std::string lexicon_path;
  std::string model_path;
  std::vector<std::string> doc_args;
  std::vector<std::string> gold_args;
  int n_requested = 10;
  std::string n_list = "5,7,10";
  std::string mask_spec;
  double epsilon = 1e-6;
  bool oov_as_noun = false;
  bool precise = false;
};

miftah::Lexicon load_lexicon_checked(const RunConfig& config) {
  if (config.lexicon_path.empty()) {
    throw miftah::Error(miftah::ErrorKind::kFormat,
                        "no lexicon given (--lexicon or MIFTAH_LEXICON)");
  }
  miftah::Lexicon lexicon = miftah::load_lexicon(config.lexicon_path);
  lexicon.set_oov_as_noun(config.oov_as_noun);
  return lexicon;
}

void report_warnings(const miftah::TrainingSummary& summary) {
  for (const std::string& warning : summary.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }
}

int cmd_train(const RunConfig& config) {
  miftah::Lexicon lexicon = load_lexicon_checked(config);
  std::vector<std::string> docs = expand_paths(config.doc_args, ".txt");
  std::vector<std::string> gold = expand_paths(config.gold_args, ".keys");
  if (docs.empty()) {
    throw miftah::Error(miftah::ErrorKind::kFormat, "no documents given");
  }
  pair_by_stem(docs, gold);

  miftah::TrainOptions options;
  if (!config.mask_spec.empty()) {
    options.mask = miftah::FeatureMask::parse(config.mask_spec);
  }
  if (!(config.epsilon > 0.0)) {
    throw miftah::Error(miftah::ErrorKind::kFormat, "epsilon must be > 0");
  }
  options.epsilon = config.epsilon;

  miftah::TrainResult result =
      miftah::train_from_corpus(docs, gold, lexicon, options);
  report_warnings(result.summary);
  miftah::save_model(result.model, config.model_path);

  std::cout << "candidates\t" << result.summary.candidate_count << '\n'
            << "positives\t" << result.summary.positive_count << '\n'
            << "negatives\t" << result.summary.negative_count << '\n';
  return kExitOk;
}

int cmd_extract(const RunConfig& config) {
  miftah::Lexicon lexicon = load_lexicon_checked(config);
  miftah::LdaModel model = miftah::load_model(config.model_path);
  std::vector<std::string> docs = expand_paths(config.doc_args, ".txt");
  if (docs.empty()) {
    throw miftah::Error(miftah::ErrorKind::kFormat, "no documents given");
  }
  std::vector<miftah::CorpusDocument> corpus = miftah::load_corpus(docs, {});
  std::vector<miftah::DocExtraction> extracted =
      miftah::extract_corpus(lexicon, model, corpus, config.n_requested);

  for (const miftah::DocExtraction& doc : extracted) {
    std::cout << "# doc: " << doc.doc_id << '\n';
    for (const miftah::ExtractedKeyphrase& k : doc.keyphrases) {
      std::cout << k.rank << '\t' << format_score(k.score, config.precise)
                << '\t' << k.surface << '\n';
    }
  }
  return kExitOk;
}

int cmd_evaluate(const RunConfig& config) {
  miftah::Lexicon lexicon = load_lexicon_checked(config);
  miftah::LdaModel model = miftah::load_model(config.model_path);
  std::vector<std::string> docs = expand_paths(config.doc_args, ".txt");
  std::vector<std::string> gold = expand_paths(config.gold_args, ".keys");
  if (docs.empty()) {
    throw miftah::Error(miftah::ErrorKind::kFormat, "no documents given");
  }
  pair_by_stem(docs, gold);

  std::vector<miftah::EvalRow> rows = miftah::evaluate_corpus(
      docs, gold, lexicon, model, parse_cutoffs(config.n_list));
  for (const miftah::EvalRow& row : rows) {
    std::cout << row.n << '\t' << format_score(row.mean_precision, config.precise)
              << '\t' << format_score(row.mean_recall, config.precise) << '\t'
              << row.doc_count << '\n';
  }
  return kExitOk;
}

int cmd_anova(const RunConfig& config) {
  miftah::Lexicon lexicon = load_lexicon_checked(config);
  std::vector<std::string> docs = expand_paths(config.doc_args, ".txt");
  std::vector<std::string> gold = expand_paths(config.gold_args, ".keys");
  if (docs.empty()) {
    throw miftah::Error(miftah::ErrorKind::kFormat, "no documents given");
  }
  pair_by_stem(docs, gold);

  std::vector<miftah::CorpusDocument> corpus = miftah::load_corpus(docs, gold);
  std::vector<miftah::DocFeatures> features =
      miftah::featurize_corpus(lexicon, corpus, /*with_labels=*/true);
  std::vector<miftah::FeatureVector> all;
  for (const miftah::DocFeatures& doc : features) {
    all.insert(all.end(), doc.vectors.begin(), doc.vectors.end());
  }

  miftah::FeatureMask order = config.mask_spec.empty()
                                  ? miftah::default_anova_order()
                                  : miftah::FeatureMask::parse(config.mask_spec);
  miftah::AnovaReport report = miftah::anova_report(all, order);

  std::cout << "# single\n";
  for (int f = 0; f < miftah::kFeatureCount; ++f) {
    std::cout << miftah::kFeatureNames[f] << '\t'
              << format_score(report.single_r2[f], config.precise) << '\n';
  }
  std::cout << "# accumulated\n";
  for (const miftah::AnovaPrefix& prefix : report.accumulated) {
    for (std::size_t i = 0; i < prefix.features.size(); ++i) {
      std::cout << (i == 0 ? "" : ",") << prefix.features[i];
    }
    std::cout << '\t' << format_score(prefix.r2, config.precise) << '\n';
    if (prefix.rank_deficient) {
      std::cerr << "warning: rank-deficient prefix ending at "
                << prefix.features.back() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supervised Arabic keyphrase extraction"};
  app.require_subcommand(1);

  RunConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", config.lexicon_path, "Lexicon TSV path")
        ->envname("MIFTAH_LEXICON");
    cmd->add_flag("--oov-as-noun", config.oov_as_noun,
                  "Treat out-of-lexicon words as general nouns");
    cmd->add_flag("--precise", config.precise,
                  "Print reals with 17 significant digits");
  };

  CLI::App* train = app.add_subcommand("train", "Fit a model from a corpus");
  add_common(train);
  train->add_option("--model", config.model_path, "Output model path")
      ->required();
  train->add_option("--docs", config.doc_args, "Document files or directory")
      ->required();
  train->add_option("--gold", config.gold_args, "Gold files or directory")
      ->required();
  train->add_option("--mask", config.mask_spec,
                    "Feature subset, e.g. x5,x6,x2");
  train->add_option("--epsilon", config.epsilon,
                    "Covariance regularization strength");

  CLI::App* extract =
      app.add_subcommand("extract", "Rank keyphrases of documents");
  add_common(extract);
  extract->add_option("--model", config.model_path, "Model path")->required();
  extract->add_option("--docs", config.doc_args,
                      "Document files or directory")
      ->required();
  extract->add_option("--n", config.n_requested, "Keyphrases per document")
      ->check(CLI::PositiveNumber);

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Score a model against gold keyphrases");
  add_common(evaluate);
  evaluate->add_option("--model", config.model_path, "Model path")->required();
  evaluate->add_option("--docs", config.doc_args,
                       "Document files or directory")
      ->required();
  evaluate->add_option("--gold", config.gold_args, "Gold files or directory")
      ->required();
  evaluate->add_option("--n", config.n_list, "Cutoff list, e.g. 5,7,10");

  CLI::App* anova =
      app.add_subcommand("anova", "Per-feature and accumulated R² report");
  add_common(anova);
  anova->add_option("--docs", config.doc_args, "Document files or directory")
      ->required();
  anova->add_option("--gold", config.gold_args, "Gold files or directory")
      ->required();
  anova->add_option("--mask", config.mask_spec,
                    "Accumulation order, e.g. x5,x6,x2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (train->parsed()) return cmd_train(config);
    if (extract->parsed()) return cmd_extract(config);
    if (evaluate->parsed()) return cmd_evaluate(config);
    return cmd_anova(config);
  } catch (const miftah::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == miftah::ErrorKind::kDegenerate ? kExitDegenerate
                                                      : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
