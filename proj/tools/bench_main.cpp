// Serial-vs-parallel benchmark over a synthetic corpus. Also doubles as
// an equality check: both modes must produce identical output.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "miftah/lexicon.hpp"
#include "miftah/model.hpp"
#include "miftah/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// A small synthetic vocabulary with enough class variety to exercise
// all three phrase rules.
miftah::Lexicon make_lexicon() {
  const char* lines[] = {
      "نص\t\tنص\t\tنص\tgeneral-noun\tmasculine\tsingle\tnone",
      "كلمة\t\tكلمة\t\tكلمة\tgeneral-noun\tfeminine\tsingle\tnone",
      "جملة\t\tجملة\t\tجملة\tgeneral-noun\tfeminine\tsingle\tnone",
      "مدينة\t\tمدينة\t\tمدينة\tplace-noun\tfeminine\tsingle\tnone",
      "كبير\t\tكبير\t\tكبير\tadjective\tmasculine\tsingle\tnone",
      "جديد\t\tجديد\t\tجديد\tadjective\tmasculine\tsingle\tnone",
      "في\t\tفي\t\tفي\tpreposition\tnone\tnone\tnone",
      "ثم\t\tثم\t\tثم\tconjunction\tnone\tnone\tnone",
      "كتب\t\tكتب\t\tكتب\tpast-verb\tmasculine\tsingle\tabsent",
      "غدا\t\tغدا\t\tغدا\tadverb\tnone\tnone\tnone",
  };
  std::vector<miftah::LexiconEntry> entries;
  std::size_t line_number = 1;
  for (const char* line : lines) {
    entries.push_back(*miftah::parse_lexicon_line(line, line_number++));
  }
  return miftah::Lexicon(std::move(entries));
}

std::vector<miftah::CorpusDocument> make_corpus(int docs, int sentences,
                                                unsigned seed) {
  const std::vector<std::string> words = {"نص",  "كلمة", "جملة", "مدينة",
                                          "كبير", "جديد", "في",   "ثم",
                                          "كتب", "غدا"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_word(0, static_cast<int>(words.size()) - 1);
  std::uniform_int_distribution<int> pick_len(3, 9);

  std::vector<miftah::CorpusDocument> corpus;
  corpus.reserve(docs);
  for (int d = 0; d < docs; ++d) {
    miftah::CorpusDocument doc;
    doc.id = "doc" + std::to_string(d);
    for (int s = 0; s < sentences; ++s) {
      int len = pick_len(rng);
      for (int w = 0; w < len; ++w) {
        doc.text += words[pick_word(rng)];
        doc.text += ' ';
      }
      doc.text += ". ";
    }
    // A frequent phrase so training has positives.
    doc.text += "نص كلمة . نص كلمة . نص كلمة .";
    doc.gold_phrases = {"نص كلمة"};
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel benchmark"};
  int docs = 200;
  int sentences = 60;
  int repeats = 3;
  unsigned seed = 20260819;
  app.add_option("--docs", docs, "Synthetic corpus size");
  app.add_option("--sentences", sentences, "Sentences per document");
  app.add_option("--repeats", repeats, "Timing repetitions");
  app.add_option("--seed", seed, "Corpus generator seed");
  CLI11_PARSE(app, argc, argv);

  miftah::Lexicon lexicon = make_lexicon();
  std::vector<miftah::CorpusDocument> corpus =
      make_corpus(docs, sentences, seed);

#ifdef _OPENMP
  std::cerr << "threads: " << omp_get_max_threads() << '\n';
#else
  std::cerr << "threads: 1 (built without OpenMP)\n";
#endif

  miftah::TrainResult trained =
      miftah::train_corpus(lexicon, corpus, {}, miftah::Exec::kSerial);

  double serial_best = 1e30;
  double parallel_best = 1e30;
  std::vector<miftah::DocExtraction> serial_out, parallel_out;
  for (int r = 0; r < repeats; ++r) {
    Clock::time_point t0 = Clock::now();
    serial_out = miftah::extract_corpus(lexicon, trained.model, corpus, 10,
                                        miftah::Exec::kSerial);
    serial_best = std::min(serial_best, seconds_since(t0));

    Clock::time_point t1 = Clock::now();
    parallel_out = miftah::extract_corpus(lexicon, trained.model, corpus, 10,
                                          miftah::Exec::kParallel);
    parallel_best = std::min(parallel_best, seconds_since(t1));
  }

  bool equal = serial_out.size() == parallel_out.size();
  for (std::size_t i = 0; equal && i < serial_out.size(); ++i) {
    equal = serial_out[i].doc_id == parallel_out[i].doc_id &&
            serial_out[i].keyphrases == parallel_out[i].keyphrases;
  }

  std::printf("extract serial   %8.3f s\n", serial_best);
  std::printf("extract parallel %8.3f s\n", parallel_best);
  std::printf("speedup          %8.2fx\n", serial_best / parallel_best);
  std::printf("outputs equal    %s\n", equal ? "yes" : "NO");
  return equal ? 0 : 1;
}
