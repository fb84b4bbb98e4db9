#include <doctest.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "miftah/candidates.hpp"
#include "miftah/lexicon.hpp"
#include "miftah/segmentation.hpp"
#include "miftah/word_class.hpp"
#include "oracles.hpp"
#include "synth.hpp"

using miftah::AnalyzedDocument;
using miftah::CandidateOccurrence;
using miftah::WordClass;

TEST_CASE("positional class sets match the explicit lists for every tag") {
  for (int t = 0; t < miftah::kWordClassCount; ++t) {
    auto c = static_cast<WordClass>(t);
    CAPTURE(miftah::word_class_name(c));
    CHECK(miftah::can_start_phrase(c) == oracles::member(oracles::start_set(), c));
    CHECK(miftah::can_end_phrase(c) == oracles::member(oracles::end_set(), c));
    CHECK(miftah::can_middle_phrase(c) ==
          oracles::member(oracles::middle_set(), c));
  }
}

TEST_CASE("rule_filter accepts and rejects representative sequences") {
  auto accepts = [](std::vector<WordClass> classes) {
    return miftah::rule_filter(classes);
  };
  // Length 1: nouns only.
  CHECK(accepts({WordClass::kGeneralNoun}));
  CHECK(accepts({WordClass::kProperNoun}));
  CHECK_FALSE(accepts({WordClass::kAdjective}));
  CHECK_FALSE(accepts({WordClass::kPreposition}));
  CHECK_FALSE(accepts({WordClass::kTimeNoun}));
  // Length 2: noun + end-class.
  CHECK(accepts({WordClass::kGeneralNoun, WordClass::kAdjective}));
  CHECK(accepts({WordClass::kDeclinedNoun, WordClass::kAugmentedNoun}));
  CHECK_FALSE(accepts({WordClass::kGeneralNoun, WordClass::kPreposition}));
  CHECK_FALSE(accepts({WordClass::kAdjective, WordClass::kGeneralNoun}));
  // Length 3: middle admits connectives that cannot end.
  CHECK(accepts({WordClass::kGeneralNoun, WordClass::kPreposition,
                 WordClass::kGeneralNoun}));
  CHECK(accepts({WordClass::kDeclinedNoun, WordClass::kConjunction,
                 WordClass::kAdjective}));
  CHECK_FALSE(accepts({WordClass::kGeneralNoun, WordClass::kGeneralNoun,
                       WordClass::kPreposition}));
  CHECK_FALSE(accepts({WordClass::kPastVerb, WordClass::kGeneralNoun,
                       WordClass::kGeneralNoun}));
  // Out-of-range lengths.
  CHECK_FALSE(accepts({}));
  CHECK_FALSE(accepts({WordClass::kGeneralNoun, WordClass::kGeneralNoun,
                       WordClass::kGeneralNoun, WordClass::kGeneralNoun}));
}

TEST_CASE("generate_ngrams enumerates clipped windows in order") {
  auto windows = miftah::generate_ngrams(synth::sentence_from_classes(
      std::vector<WordClass>(4, WordClass::kGeneralNoun)));
  std::vector<std::pair<int, int>> got;
  for (const miftah::NgramWindow& w : windows) got.emplace_back(w.start, w.length);
  std::vector<std::pair<int, int>> expected = {
      {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3},
      {2, 1}, {2, 2}, {3, 1}};
  CHECK(got == expected);

  CHECK(miftah::generate_ngrams(synth::sentence_from_classes({})).empty());
  CHECK(miftah::generate_ngrams(synth::sentence_from_classes(
                                    {WordClass::kAdverb}))
            .size() == 1);
}

TEST_CASE("extract_candidates equals the brute-force oracle on random sentences") {
  std::mt19937 rng(20260819u);
  for (int round = 0; round < 500; ++round) {
    std::vector<WordClass> classes = synth::random_classes(rng, 8);
    AnalyzedDocument doc;
    doc.id = "synthetic";
    doc.sentences.push_back(synth::sentence_from_classes(classes));

    std::vector<CandidateOccurrence> got = miftah::extract_candidates(doc);
    std::vector<std::pair<int, int>> got_windows;
    for (const CandidateOccurrence& c : got) {
      got_windows.emplace_back(c.start_word_index, c.length);
    }
    CAPTURE(round);
    REQUIRE(got_windows == oracles::naive_windows(classes));

    // Occurrence payloads line up with the sentence tokens.
    for (const CandidateOccurrence& c : got) {
      std::string surface, abstract;
      for (int k = 0; k < c.length; ++k) {
        if (k > 0) {
          surface += ' ';
          abstract += ' ';
        }
        const miftah::Token& token =
            doc.sentences[0].tokens[c.start_word_index + k];
        surface += token.surface;
        abstract += token.entry.abstract;
        REQUIRE(c.classes[k] == token.entry.word_class);
      }
      REQUIRE(c.surface == surface);
      REQUIRE(c.abstract == abstract);
      REQUIRE(c.sentence_index == 0);
      REQUIRE(c.doc_id == "synthetic");
    }
  }
}

TEST_CASE("candidates span sentences of a multi-sentence document") {
  AnalyzedDocument doc;
  doc.id = "d";
  doc.sentences.push_back(synth::sentence_from_classes(
      {WordClass::kGeneralNoun, WordClass::kAdjective}, 0));
  doc.sentences.push_back(synth::sentence_from_classes(
      {WordClass::kPastVerb, WordClass::kPlaceNoun}, 1));
  std::vector<CandidateOccurrence> got = miftah::extract_candidates(doc);
  REQUIRE(got.size() == 3);  // noun, noun+adj, place-noun
  CHECK(got[0].sentence_index == 0);
  CHECK(got[1].length == 2);
  CHECK(got[2].sentence_index == 1);
  CHECK(got[2].start_word_index == 1);
}

TEST_CASE("demo sentence yields its ten candidates byte-exactly") {
  miftah::Lexicon lexicon =
      miftah::load_lexicon(synth::data_dir() + "/mini_lexicon.tsv");
  AnalyzedDocument doc = miftah::analyze_document(
      "t1",
      "إن مشاريع التعليم عن بعد تعتبر من أهم تقنيات الاتصالات والمعلومات",
      lexicon);
  std::vector<CandidateOccurrence> got = miftah::extract_candidates(doc);

  const std::vector<std::pair<std::string, std::string>> expected = {
      {"مشاريع", "مشروع"},
      {"مشاريع التعليم", "مشروع تعليم"},
      {"التعليم", "تعليم"},
      {"التعليم عن بعد", "تعليم عن بعد"},
      {"بعد", "بعد"},
      {"تقنيات", "تقنية"},
      {"تقنيات الاتصالات", "تقنية اتصال"},
      {"تقنيات الاتصالات والمعلومات", "تقنية اتصال معلومة"},
      {"الاتصالات", "اتصال"},
      {"الاتصالات والمعلومات", "اتصال معلومة"},
  };
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CAPTURE(i);
    CHECK(got[i].surface == expected[i].first);
    CHECK(got[i].abstract == expected[i].second);
  }
  // The rejected shapes stay rejected: no candidate starts at the
  // preposition and nothing exceeds three words.
  for (const CandidateOccurrence& c : got) {
    CHECK(c.surface.find("عن بعد تعتبر") == std::string::npos);
    CHECK(c.length <= 3);
    CHECK(c.surface != "عن بعد");
  }
}

TEST_CASE("phrase_abstract unifies inflected forms") {
  miftah::Lexicon lexicon =
      miftah::load_lexicon(synth::data_dir() + "/mini_lexicon.tsv");
  CHECK(miftah::phrase_abstract(lexicon, "قواعد البيانات") == "قاعدة بيان");
  CHECK(miftah::phrase_abstract(lexicon, "قاعدة بيانات") == "قاعدة بيان");
  CHECK(miftah::phrase_abstract(lexicon, "  قاعدة   بيانات ") == "قاعدة بيان");
  CHECK(miftah::phrase_abstract(lexicon, "") == "");
}
