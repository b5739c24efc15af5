// Runs the built `sner` binary end to end through the shell.

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

#include "search_rows.h"
#include "test_util.h"

namespace sner {
namespace {

using testing::TempDir;

struct Result {
  int exit_code;
  std::string out;
  std::string err;
};

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
}

class CliTest : public ::testing::Test {
 protected:
  // Runs `sner <args>` with `input` on stdin.
  Result Run(const std::string& args, const std::string& input = "") {
    WriteFile(dir_ / "stdin", input);
    const std::string cmd = "env -u NER_CONFIG '" + std::string(SNER_CLI_PATH) +
                            "' " + args + " < '" + (dir_ / "stdin").string() +
                            "' > '" + (dir_ / "stdout").string() + "' 2> '" +
                            (dir_ / "stderr").string() + "'";
    int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, Slurp(dir_ / "stdout"),
            Slurp(dir_ / "stderr")};
  }

  std::string Path(const std::string& name) const {
    return "'" + (dir_ / name).string() + "'";
  }

  TempDir dir_;
};

const char kPostpositionSentence[] = "اويس جي گهر ۾ ڪتاب پيو آهي";

TEST_F(CliTest, TagInlineFromStdin) {
  Result r = Run("tag --format inline", std::string(kPostpositionSentence) + "\n");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "<PERSON>اويس</PERSON> جي گهر ۾ ڪتاب پيو آهي\n");
}

TEST_F(CliTest, TagEmptyStdin) {
  Result r = Run("tag");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "");
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  for (const char* args : {"tag --format bogus", "tag --no-such-flag",
                           "--disable-rule R99 tag", "query", "frobnicate"}) {
    Result r = Run(args);
    EXPECT_EQ(r.exit_code, 2) << args;
    EXPECT_EQ(r.err.rfind("error:", 0), 0u) << r.err;
  }
  Result r = Run("tag --format bogus");
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST_F(CliTest, DisableRule) {
  Result r = Run("--disable-rule R6_Postposition tag", kPostpositionSentence);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, kPostpositionSentence);
}

TEST_F(CliTest, InvalidUtf8IsADomainError) {
  Result r = Run("tag", "\xff\xfe");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err.rfind("error:InvalidInput:", 0), 0u) << r.err;
}

TEST_F(CliTest, StdinAndFileAgree) {
  std::mt19937 rng(43);
  std::string text;
  for (const auto& row : testing::SearchRows()) text += row.Sentence() + "\n";
  text += testing::RandomText(rng, 200);
  WriteFile(dir_.path() / "in.txt", text);
  for (const char* format : {"inline", "tabular", "jsonl"}) {
    Result from_stdin = Run(std::string("tag --format ") + format, text);
    Result from_file =
        Run(std::string("tag --format ") + format + " " + Path("in.txt"));
    Result again =
        Run(std::string("tag --format ") + format + " " + Path("in.txt"));
    EXPECT_EQ(from_stdin.exit_code, 0);
    EXPECT_EQ(from_stdin.out, from_file.out) << format;
    EXPECT_EQ(from_file.out, again.out) << format;
  }
}

TEST_F(CliTest, ParallelJobsKeepInputOrder) {
  std::string files;
  for (size_t k = 0; k < testing::SearchRows().size(); ++k) {
    const std::string name = "doc" + std::to_string(k) + ".txt";
    WriteFile(dir_.path() / name, testing::SearchRows()[k].Sentence() + "\n");
    files += " " + Path(name);
  }
  Result serial = Run("tag --format jsonl --jobs 1" + files);
  Result parallel = Run("tag --format jsonl --jobs 4" + files);
  EXPECT_EQ(serial.exit_code, 0);
  EXPECT_EQ(serial.out, parallel.out);
  std::istringstream lines(serial.out);
  std::string line;
  size_t k = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["text"], testing::SearchRows()[k].Sentence() + "\n");
    ++k;
  }
  EXPECT_EQ(k, testing::SearchRows().size());
}

TEST_F(CliTest, MultipleInlineFilesStaySeparated) {
  WriteFile(dir_.path() / "a.txt", "سکر");
  WriteFile(dir_.path() / "b.txt", "سکر");
  Result r = Run("tag " + Path("a.txt") + " " + Path("b.txt"));
  EXPECT_EQ(r.out, "<LOCATION>سکر</LOCATION>\n<LOCATION>سکر</LOCATION>");
}

TEST_F(CliTest, EvalMiniCorpus) {
  const std::string gold = (testing::DataDir() / "gold" / "mini.tsv").string();
  Result r = Run("eval --gold '" + gold + "'");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("token accuracy: 100.00%", 0), 0u) << r.out;

  Result j = Run("eval --json --gold '" + gold + "'");
  EXPECT_EQ(j.exit_code, 0);
  auto report = nlohmann::json::parse(j.out);
  EXPECT_EQ(report["total"], report["correct"]);
}

TEST_F(CliTest, EvalNineOfTen) {
  // "گهر" is labeled LOCATION in the gold; the engine leaves it untagged.
  WriteFile(dir_.path() / "gold.tsv",
            "اويس\tPERSON\nجي\tO\nگهر\tLOCATION\n۾\tO\nڪتاب\tO\nپيو\tO\n"
            "آهي\tO\n۔\tO\n\nسکر\tLOCATION\nويو\tO\n");
  Result r = Run("eval --gold " + Path("gold.tsv"));
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("token accuracy: 90.00% (9/10)", 0), 0u) << r.out;
}

TEST_F(CliTest, EvalErrors) {
  WriteFile(dir_.path() / "empty.tsv", "\n\n");
  Result r = Run("eval --gold " + Path("empty.tsv"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err.rfind("error:EmptyCorpus:", 0), 0u) << r.err;

  WriteFile(dir_.path() / "bad.tsv", "اويس\tPERSONN\n");
  r = Run("eval --gold " + Path("bad.tsv"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err.rfind("error:UnknownLabel:", 0), 0u) << r.err;
  EXPECT_NE(r.err.find("bad.tsv:1"), std::string::npos);

  WriteFile(dir_.path() / "malformed.tsv", "اويس\n");
  r = Run("eval --gold " + Path("malformed.tsv"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err.rfind("error:MalformedLine:", 0), 0u) << r.err;
}

TEST_F(CliTest, StoreAndQuery) {
  std::string text;
  for (const auto& row : testing::SearchRows()) text += row.Sentence() + "\n";
  Result tag = Run("tag --per-line --format jsonl --store " + Path("s.jsonl"),
                   text);
  EXPECT_EQ(tag.exit_code, 0) << tag.err;
  EXPECT_NE(tag.err.find("stored record 10"), std::string::npos);

  Result q = Run("query --store " + Path("s.jsonl") +
                 " --label ORGANIZATION --surface يونيورسٽي");
  EXPECT_EQ(q.exit_code, 0);
  EXPECT_EQ(q.out, "1\tORGANIZATION\tشاه عبدالطيف يونيورسٽي\tR10_OrgKeyword\n");

  q = Run("query --store " + Path("s.jsonl") + " --label PERSON --surface اويس");
  EXPECT_EQ(std::count(q.out.begin(), q.out.end(), '\n'), 10);

  q = Run("query --store " + Path("s.jsonl") + " --label EMAIL");
  EXPECT_EQ(q.exit_code, 0);
  EXPECT_EQ(q.out, "");
}

TEST_F(CliTest, QueryMissingOrCorruptStore) {
  Result r = Run("query --store " + Path("none.jsonl"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err.rfind("error:MissingDataFile:", 0), 0u) << r.err;

  WriteFile(dir_.path() / "bad.jsonl",
            "{\"id\":1,\"text\":\"\",\"entities\":[]}\ngarbage\n");
  r = Run("query --store " + Path("bad.jsonl"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err.rfind("error:CorruptStore:", 0), 0u) << r.err;
  EXPECT_NE(r.err.find("byte 33"), std::string::npos) << r.err;
}

TEST_F(CliTest, GazetteerListMatchesFiles) {
  Result r = Run("gazetteer list");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  std::map<std::string, size_t> oracle;
  size_t total = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(testing::DataDir())) {
    if (entry.path().extension() != ".tsv") continue;
    std::ifstream in(entry.path());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      ++oracle[line.substr(line.find('\t') + 1)];
      ++total;
    }
  }
  std::istringstream rows(r.out);
  std::string name;
  size_t count;
  size_t seen = 0;
  while (rows >> name >> count) {
    ++seen;
    if (name == "total") {
      EXPECT_EQ(count, total);
    } else {
      EXPECT_EQ(count, oracle[name]) << name;
    }
  }
  EXPECT_EQ(seen, 20u);
}

TEST_F(CliTest, GazetteerCheckAndAdd) {
  std::filesystem::copy(testing::DataDir(), dir_.path() / "data",
                        std::filesystem::copy_options::recursive);
  const std::string config = "--config " + Path("data/default.conf");

  Result r = Run(config + " gazetteer check");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "OK\n");

  r = Run(config + " gazetteer add --file " + Path("data/places.tsv") +
          " --surface خيرپور --category Location");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err.rfind("error:DuplicateEntry:", 0), 0u) << r.err;

  r = Run(config + " gazetteer add --file " + Path("data/places.tsv") +
          " --surface نئون‌ڳوٺ --category Location");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "added\n");
  r = Run(config + " tag", "نئون‌ڳوٺ");
  EXPECT_EQ(r.out, "<LOCATION>نئون‌ڳوٺ</LOCATION>");

  r = Run(config + " gazetteer add --file " + Path("data/places.tsv") +
          " --surface x --category Nope");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err.rfind("error:UnknownCategory:", 0), 0u) << r.err;

  // A broken file: check lists every bad line, and tagging refuses to start.
  std::ofstream(dir_.path() / "data" / "places.tsv", std::ios::app)
      << "بدين\n" << "سکر\tTown\n";
  r = Run(config + " gazetteer check");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("error:MalformedLine:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("error:UnknownCategory:"), std::string::npos) << r.err;
  r = Run(config + " tag", "سکر");
  EXPECT_EQ(r.exit_code, 1);
}

TEST_F(CliTest, ConfigFromEnvironmentAndBadConfig) {
  WriteFile(dir_.path() / "bad.conf", "gazetteer\n");
  Result r = Run("--config " + Path("bad.conf") + " tag", "سکر");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.err.rfind("error:BadConfig:", 0), 0u) << r.err;

  const std::string cmd =
      "printf 'سکر' | NER_CONFIG='" + (dir_.path() / "bad.conf").string() +
      "' '" + SNER_CLI_PATH + "' tag > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
}

}  // namespace
}  // namespace sner
