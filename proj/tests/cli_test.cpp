// End-to-end tests of the command-line binary. The test runner passes
// the binary location in MIFTAH_CLI_BIN and the bundled data directory
// in MIFTAH_DATA_DIR.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string getenv_or_fail(const char* name) {
  const char* value = std::getenv(name);
  REQUIRE_MESSAGE(value != nullptr, name, " must be set");
  return value;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CliFixture {
  fs::path dir;
  std::string bin;
  std::string lexicon;

  CliFixture() {
    bin = getenv_or_fail("MIFTAH_CLI_BIN");
    lexicon = getenv_or_fail("MIFTAH_DATA_DIR") + "/mini_lexicon.tsv";
    dir = fs::temp_directory_path() / "miftah_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir / "docs");
    fs::create_directories(dir / "gold");

    write_doc("d1", "المشروع", "مشروع");
    write_doc("d2", "النماذج", "النموذج");
    write_doc("d3", "التعليم", "التعليم");
    write_doc("d4", "الاتصالات", "الاتصالات");
  }

  ~CliFixture() { fs::remove_all(dir); }

  void write_doc(const std::string& id, const std::string& main_word,
                 const std::string& gold_phrase) {
    std::ofstream doc(dir / "docs" / (id + ".txt"), std::ios::binary);
    for (int i = 0; i < 6; ++i) doc << main_word << ". ";
    doc << "قاعدة بيانات. أشجار.\n";
    std::ofstream gold(dir / "gold" / (id + ".keys"), std::ios::binary);
    gold << gold_phrase << "\n";
  }

  RunResult run(const std::string& args,
                const std::string& env_prefix = "") const {
    fs::path out_path = dir / "stdout.txt";
    fs::path err_path = dir / "stderr.txt";
    std::string command = env_prefix + "\"" + bin + "\" " + args + " > \"" +
                          out_path.string() + "\" 2> \"" + err_path.string() +
                          "\"";
    int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
  }

  std::string docs() const { return (dir / "docs").string(); }
  std::string gold() const { return (dir / "gold").string(); }
  std::string model() const { return (dir / "model.tsv").string(); }

  std::string common() const {
    return "--lexicon \"" + lexicon + "\" ";
  }
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

bool looks_like_fixed3(const std::string& s) {
  std::size_t dot = s.find('.');
  return dot != std::string::npos && s.size() - dot - 1 == 3;
}

}  // namespace

TEST_CASE("command-line workflows") {
  CliFixture cli;

  // --- train ---
  RunResult train = cli.run("train " + cli.common() + "--model \"" +
                            cli.model() + "\" --docs \"" + cli.docs() +
                            "\" --gold \"" + cli.gold() + "\"");
  CAPTURE(train.err);
  REQUIRE(train.exit_code == 0);
  REQUIRE(fs::exists(cli.model()));
  CHECK(train.out ==
        "candidates\t40\npositives\t24\nnegatives\t16\n");
  CHECK(train.err.find("warning") == std::string::npos);

  SUBCASE("extract prints ranked phrases and is reproducible") {
    std::string args = "extract " + cli.common() + "--model \"" +
                       cli.model() + "\" --docs \"" +
                       (fs::path(cli.docs()) / "d1.txt").string() +
                       "\" --n 3";
    RunResult first = cli.run(args);
    REQUIRE(first.exit_code == 0);
    std::vector<std::string> lines = lines_of(first.out);
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "# doc: d1");
    REQUIRE(lines.size() <= 4);  // header + at most n rows
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::vector<std::string> fields = fields_of(lines[i]);
      REQUIRE(fields.size() == 3);
      CHECK(fields[0] == std::to_string(i));
      CHECK(looks_like_fixed3(fields[1]));
      CHECK_FALSE(fields[2].empty());
    }
    // The dominant word is ranked first, surface form preserved.
    CHECK(fields_of(lines[1])[2] == "المشروع");

    RunResult second = cli.run(args);
    CHECK(second.out == first.out);

    RunResult precise = cli.run(args + " --precise");
    REQUIRE(precise.exit_code == 0);
    std::string score3 = fields_of(lines[1])[1];
    std::string score17 = fields_of(lines_of(precise.out)[1])[1];
    CHECK(score17.size() > score3.size());
    CHECK(std::stod(score17) == doctest::Approx(std::stod(score3)).epsilon(1e-3));
  }

  SUBCASE("extract over a directory emits one block per document") {
    RunResult all = cli.run("extract " + cli.common() + "--model \"" +
                            cli.model() + "\" --docs \"" + cli.docs() + "\"");
    REQUIRE(all.exit_code == 0);
    int headers = 0;
    for (const std::string& line : lines_of(all.out)) {
      if (line.rfind("# doc: ", 0) == 0) ++headers;
    }
    CHECK(headers == 4);
    CHECK(all.out.find("# doc: d1") < all.out.find("# doc: d2"));
    CHECK(all.out.find("# doc: d3") < all.out.find("# doc: d4"));
  }

  SUBCASE("evaluate prints one row per requested cutoff") {
    RunResult eval = cli.run("evaluate " + cli.common() + "--model \"" +
                             cli.model() + "\" --docs \"" + cli.docs() +
                             "\" --gold \"" + cli.gold() + "\" --n 3,12");
    REQUIRE(eval.exit_code == 0);
    std::vector<std::string> rows = lines_of(eval.out);
    REQUIRE(rows.size() == 2);
    std::vector<std::string> row3 = fields_of(rows[0]);
    std::vector<std::string> row12 = fields_of(rows[1]);
    REQUIRE(row3.size() == 4);
    CHECK(row3[0] == "3");
    CHECK(row12[0] == "12");
    CHECK(row3[3] == "4");
    // Every document has at most five phrase groups, so the n=12 slice
    // holds them all and recall is exact.
    CHECK(row12[2] == "1.000");
    CHECK(std::stod(row3[2]) <= std::stod(row12[2]) + 1e-9);
  }

  SUBCASE("anova prints the single and accumulated blocks") {
    RunResult anova = cli.run("anova " + cli.common() + "--docs \"" +
                              cli.docs() + "\" --gold \"" + cli.gold() + "\"");
    REQUIRE(anova.exit_code == 0);
    std::vector<std::string> lines = lines_of(anova.out);
    REQUIRE(lines.size() == 1 + 8 + 1 + 6);
    CHECK(lines[0] == "# single");
    CHECK(lines[9] == "# accumulated");
    for (int f = 0; f < 8; ++f) {
      std::vector<std::string> fields = fields_of(lines[1 + f]);
      REQUIRE(fields.size() == 2);
      CHECK(fields[0] == "x" + std::to_string(f + 1));
      double r2 = std::stod(fields[1]);
      CHECK(r2 >= 0.0);
      CHECK(r2 <= 1.0);
    }
    CHECK(fields_of(lines[10])[0] == "x5");
    CHECK(fields_of(lines[15])[0] == "x5,x6,x2,x1,x4,x8");
    double previous = 0.0;
    for (int p = 0; p < 6; ++p) {
      double r2 = std::stod(fields_of(lines[10 + p])[1]);
      CHECK(r2 >= previous - 1e-9);
      previous = r2;
    }

    RunResult masked = cli.run("anova " + cli.common() + "--docs \"" +
                               cli.docs() + "\" --gold \"" + cli.gold() +
                               "\" --mask x5,x1");
    REQUIRE(masked.exit_code == 0);
    CHECK(lines_of(masked.out).size() == 1 + 8 + 1 + 2);
  }

  SUBCASE("the lexicon falls back to MIFTAH_LEXICON") {
    RunResult env_run =
        cli.run("extract --model \"" + cli.model() + "\" --docs \"" +
                    (fs::path(cli.docs()) / "d1.txt").string() + "\"",
                "MIFTAH_LEXICON=\"" + cli.lexicon + "\" ");
    CHECK(env_run.exit_code == 0);
    CHECK(env_run.out.rfind("# doc: d1", 0) == 0);
  }

  SUBCASE("input errors exit with code 1") {
    RunResult missing_gold =
        cli.run("train " + cli.common() + "--model \"" + cli.model() +
                "\" --docs \"" + cli.docs() + "\" --gold \"" +
                (cli.dir / "nowhere").string() + "\"");
    CHECK(missing_gold.exit_code == 1);
    CHECK_FALSE(missing_gold.err.empty());

    RunResult bad_lexicon =
        cli.run("extract --lexicon /nonexistent.tsv --model \"" +
                cli.model() + "\" --docs \"" + cli.docs() + "\"");
    CHECK(bad_lexicon.exit_code == 1);
    CHECK(bad_lexicon.err.find("/nonexistent.tsv") != std::string::npos);

    RunResult bad_flag = cli.run("extract --frobnicate");
    CHECK(bad_flag.exit_code == 1);

    RunResult no_model = cli.run("extract " + cli.common() + "--docs \"" +
                                 cli.docs() + "\"");
    CHECK(no_model.exit_code == 1);

    RunResult bad_cutoff =
        cli.run("evaluate " + cli.common() + "--model \"" + cli.model() +
                "\" --docs \"" + cli.docs() + "\" --gold \"" + cli.gold() +
                "\" --n 5,zero");
    CHECK(bad_cutoff.exit_code == 1);
  }

  SUBCASE("statistical degeneracy exits with code 2") {
    fs::create_directories(cli.dir / "degen_docs");
    fs::create_directories(cli.dir / "degen_gold");
    {
      std::ofstream doc(cli.dir / "degen_docs" / "p.txt", std::ios::binary);
      doc << "المشروع. المشروع. المشروع.\n";  // every candidate is gold
      std::ofstream gold(cli.dir / "degen_gold" / "p.keys", std::ios::binary);
      gold << "مشروع\n";
    }
    RunResult degen =
        cli.run("train " + cli.common() + "--model \"" + cli.model() +
                "\" --docs \"" + (cli.dir / "degen_docs").string() +
                "\" --gold \"" + (cli.dir / "degen_gold").string() + "\"");
    CHECK(degen.exit_code == 2);
    CHECK(degen.err.find("degenerate") != std::string::npos);
  }

  SUBCASE("unmatchable gold is a warning, not an error") {
    {
      std::ofstream gold(cli.dir / "gold" / "d1.keys", std::ios::binary);
      gold << "مشروع\nعبارة غائبة\n";
    }
    RunResult warned = cli.run("train " + cli.common() + "--model \"" +
                               cli.model() + "\" --docs \"" + cli.docs() +
                               "\" --gold \"" + cli.gold() + "\"");
    CHECK(warned.exit_code == 0);
    CHECK(warned.err.find("unmatchable gold") != std::string::npos);
    CHECK(warned.err.find("عبارة غائبة") != std::string::npos);
    CHECK(warned.out.find("warning") == std::string::npos);
  }
}
