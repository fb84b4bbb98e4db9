#include "miftah/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "miftah/errors.hpp"
#include "miftah/text.hpp"

namespace miftah {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

bool contains_whitespace(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    auto [cp, len] = text::decode_codepoint(s, i);
    if (text::is_ascii_space(cp)) return true;
    i += len;
  }
  return false;
}

[[noreturn]] void malformed(std::size_t line_number, const std::string& what) {
  std::ostringstream msg;
  msg << "malformed line " << line_number << ": " << what;
  throw Error(ErrorKind::kFormat, msg.str());
}

}  // namespace

std::string_view gender_name(Gender g) {
  switch (g) {
    case Gender::kMasculine: return "masculine";
    case Gender::kFeminine: return "feminine";
    case Gender::kNone: return "none";
  }
  return "none";
}

std::string_view number_name(Number n) {
  switch (n) {
    case Number::kSingle: return "single";
    case Number::kDual: return "dual";
    case Number::kPlural: return "plural";
    case Number::kNone: return "none";
  }
  return "none";
}

std::string_view person_name(Person p) {
  switch (p) {
    case Person::kFirst: return "first";
    case Person::kSecond: return "second";
    case Person::kAbsent: return "absent";
    case Person::kNone: return "none";
  }
  return "none";
}

std::optional<Gender> parse_gender(std::string_view tag) {
  if (tag == "masculine") return Gender::kMasculine;
  if (tag == "feminine") return Gender::kFeminine;
  if (tag == "none") return Gender::kNone;
  return std::nullopt;
}

std::optional<Number> parse_number(std::string_view tag) {
  if (tag == "single") return Number::kSingle;
  if (tag == "dual") return Number::kDual;
  if (tag == "plural") return Number::kPlural;
  if (tag == "none") return Number::kNone;
  return std::nullopt;
}

std::optional<Person> parse_person(std::string_view tag) {
  if (tag == "first") return Person::kFirst;
  if (tag == "second") return Person::kSecond;
  if (tag == "absent") return Person::kAbsent;
  if (tag == "none") return Person::kNone;
  return std::nullopt;
}

std::string to_tsv_line(const LexiconEntry& entry) {
  std::string line;
  line += entry.surface;
  line += '\t';
  line += entry.prefix;
  line += '\t';
  line += entry.stem;
  line += '\t';
  line += entry.suffix;
  line += '\t';
  line += entry.abstract;
  line += '\t';
  line += word_class_name(entry.word_class);
  line += '\t';
  line += gender_name(entry.gender);
  line += '\t';
  line += number_name(entry.number);
  line += '\t';
  line += person_name(entry.person);
  return line;
}

std::optional<LexiconEntry> parse_lexicon_line(std::string_view line,
                                               std::size_t line_number) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty() || line.front() == '#') return std::nullopt;

  auto fields = split_tabs(line);
  // 9 columns is the canonical format; 10 columns carries an extra
  // root column between suffix and abstract, which is read and dropped.
  if (fields.size() != 9 && fields.size() != 10) {
    malformed(line_number, "expected 9 columns, found " +
                               std::to_string(fields.size()));
  }
  const bool has_root = fields.size() == 10;
  const int abstract_col = has_root ? 5 : 4;

  LexiconEntry entry;
  entry.surface = std::string(fields[0]);
  entry.prefix = std::string(fields[1]);
  entry.stem = std::string(fields[2]);
  entry.suffix = std::string(fields[3]);
  entry.abstract = std::string(fields[abstract_col]);

  if (entry.surface.empty()) malformed(line_number, "empty surface");
  if (contains_whitespace(entry.surface))
    malformed(line_number, "surface contains whitespace");
  if (entry.abstract.empty()) malformed(line_number, "empty abstract");

  auto word_class = parse_word_class(fields[abstract_col + 1]);
  if (!word_class) {
    malformed(line_number, "unrecognized word-class tag \"" +
                               std::string(fields[abstract_col + 1]) + "\"");
  }
  entry.word_class = *word_class;

  auto gender = parse_gender(fields[abstract_col + 2]);
  if (!gender) {
    malformed(line_number,
              "unrecognized gender \"" + std::string(fields[abstract_col + 2]) +
                  "\"");
  }
  entry.gender = *gender;

  auto number = parse_number(fields[abstract_col + 3]);
  if (!number) {
    malformed(line_number,
              "unrecognized number \"" + std::string(fields[abstract_col + 3]) +
                  "\"");
  }
  entry.number = *number;

  auto person = parse_person(fields[abstract_col + 4]);
  if (!person) {
    malformed(line_number,
              "unrecognized person \"" + std::string(fields[abstract_col + 4]) +
                  "\"");
  }
  entry.person = *person;
  return entry;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries)
    : entries_(std::move(entries)) {
  first_index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    first_index_.emplace(entries_[i].surface, i);  // keeps the first hit
  }
}

const LexiconEntry* Lexicon::find(std::string_view surface) const {
  auto it = first_index_.find(surface);
  if (it == first_index_.end()) return nullptr;
  return &entries_[it->second];
}

LexiconEntry Lexicon::analyze(std::string_view surface) const {
  if (const LexiconEntry* hit = find(surface)) return *hit;

  std::string folded = text::fold_alef_strip_tatweel(surface);
  if (folded != surface && !folded.empty()) {
    if (const LexiconEntry* hit = find(folded)) return *hit;
  }

  LexiconEntry oov;
  oov.surface = std::string(surface);
  oov.abstract = std::string(surface);
  oov.word_class =
      oov_as_noun_ ? WordClass::kGeneralNoun : WordClass::kUnknown;
  return oov;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open lexicon file: " + path);
  }
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto entry = parse_lexicon_line(line, line_number)) {
      entries.push_back(std::move(*entry));
    }
  }
  if (in.bad()) {
    throw Error(ErrorKind::kIo, "I/O failure while reading " + path);
  }
  return Lexicon(std::move(entries));
}

}  // namespace miftah
