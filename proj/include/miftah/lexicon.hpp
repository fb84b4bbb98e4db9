#ifndef MIFTAH_LEXICON_HPP_
#define MIFTAH_LEXICON_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "miftah/word_class.hpp"

namespace miftah {

enum class Gender { kMasculine, kFeminine, kNone };
enum class Number { kSingle, kDual, kPlural, kNone };
// kAbsent is the Arabic third person (the "absent" pronoun).
enum class Person { kFirst, kSecond, kAbsent, kNone };

std::string_view gender_name(Gender g);
std::string_view number_name(Number n);
std::string_view person_name(Person p);
std::optional<Gender> parse_gender(std::string_view tag);
std::optional<Number> parse_number(std::string_view tag);
std::optional<Person> parse_person(std::string_view tag);

// One analyzed surface word. prefix/stem/suffix are read from the
// lexicon file as-is; nothing here computes morphology.
struct LexiconEntry {
  std::string surface;
  std::string prefix;
  std::string stem;
  std::string suffix;
  std::string abstract;
  WordClass word_class = WordClass::kUnknown;
  Gender gender = Gender::kNone;
  Number number = Number::kNone;
  Person person = Person::kNone;

  bool operator==(const LexiconEntry&) const = default;
};

// Serializes an entry back to one lexicon TSV line (9 columns).
std::string to_tsv_line(const LexiconEntry& entry);

// Parses one lexicon line. line_number is 1-based and only used in
// error messages. Returns nullopt for blank and comment lines.
std::optional<LexiconEntry> parse_lexicon_line(std::string_view line,
                                               std::size_t line_number);

// Immutable after construction; lookups are safe from any number of
// threads. Several entries may share a surface; the first one listed
// wins, mirroring a corpus lookup that returns its first hit.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<LexiconEntry> entries);

  // Analyzes a surface word: exact lookup, then a retry with alef
  // folding and tatweel stripping applied to the query, then a
  // synthesized out-of-vocabulary entry. Never fails for non-empty
  // whitespace-free input.
  LexiconEntry analyze(std::string_view surface) const;

  std::size_t entry_count() const { return entries_.size(); }
  const std::vector<LexiconEntry>& entries() const { return entries_; }

  // When set, out-of-lexicon words analyze as general-noun instead of
  // unknown, trading precision for recall on sparse lexicons.
  void set_oov_as_noun(bool value) { oov_as_noun_ = value; }
  bool oov_as_noun() const { return oov_as_noun_; }

 private:
  struct TransparentHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  const LexiconEntry* find(std::string_view surface) const;

  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t, TransparentHash,
                     std::equal_to<>>
      first_index_;
  bool oov_as_noun_ = false;
};

// Loads a UTF-8 lexicon TSV. Blank lines and lines starting with '#'
// are skipped. Throws Error{kIo} when the file cannot be read and
// Error{kFormat} naming the line number for malformed lines.
Lexicon load_lexicon(const std::string& path);

}  // namespace miftah

#endif  // MIFTAH_LEXICON_HPP_
