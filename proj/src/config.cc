#include "sner/config.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "sner/error.h"

#ifndef SNER_DATA_DIR
#define SNER_DATA_DIR "data"
#endif

namespace sner {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              std::string_view value) {
  std::filesystem::path p{std::string(value)};
  return p.is_absolute() || base.empty() ? p : base / p;
}

[[noreturn]] void Fail(size_t line_no, const std::string& message) {
  throw Error(ErrorCode::kBadConfig,
              "config line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

EngineConfig::EngineConfig() {
  enabled.fill(true);
  for (size_t r = 0; r < kNumRules; ++r) {
    priorities[r] = DefaultPriority(static_cast<RuleId>(r));
  }
}

EngineConfig EngineConfig::Parse(std::string_view text,
                                 const std::filesystem::path& base_dir) {
  EngineConfig config;
  std::istringstream in{std::string(text)};
  std::string raw_line;
  size_t line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string_view line = Trim(raw_line);
    if (line.empty() || line.front() == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) Fail(line_no, "expected key = value");
    std::string_view key = Trim(line.substr(0, eq));
    std::string_view value = Trim(line.substr(eq + 1));

    if (key == "gazetteer") {
      config.gazetteers.push_back(Resolve(base_dir, value));
    } else if (key == "suffixes") {
      config.suffixes = Resolve(base_dir, value);
    } else if (key == "stopwords") {
      config.stopwords = Resolve(base_dir, value);
    } else if (key == "synonyms") {
      if (value.empty()) {
        config.synonyms.reset();
      } else {
        config.synonyms = Resolve(base_dir, value);
      }
    } else if (key == "specials") {
      config.specials = SpecialSet::Parse(value);
    } else if (key.starts_with("rule.")) {
      auto rule = ParseRule(key.substr(5));
      if (!rule) Fail(line_no, "unknown rule '" + std::string(key.substr(5)) + "'");
      if (value == "on") {
        config.Enable(*rule, true);
      } else if (value == "off") {
        config.Enable(*rule, false);
      } else {
        Fail(line_no, "rule toggle must be on or off");
      }
    } else if (key.starts_with("priority.")) {
      auto rule = ParseRule(key.substr(9));
      if (!rule) Fail(line_no, "unknown rule '" + std::string(key.substr(9)) + "'");
      try {
        size_t used = 0;
        int p = std::stoi(std::string(value), &used);
        if (used != value.size()) throw std::invalid_argument("trailing");
        config.priorities[static_cast<size_t>(*rule)] = p;
      } catch (const std::logic_error&) {
        Fail(line_no, "priority must be an integer");
      }
    } else {
      Fail(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  return config;
}

EngineConfig EngineConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMissingDataFile,
                "cannot open config file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), path.parent_path());
}

std::filesystem::path DefaultDataDir() {
  if (const char* dir = std::getenv("SNER_DATA_DIR"); dir && *dir) return dir;
  return SNER_DATA_DIR;
}

std::filesystem::path DefaultConfigPath() {
  return DefaultDataDir() / "default.conf";
}

SynonymMap LoadSynonyms(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMissingDataFile,
                "cannot open synonym file " + path.string());
  }
  SynonymMap map;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    size_t tab = view.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  path.string() + ":" + std::to_string(line_no) +
                      ": expected variant<TAB>canonical");
    }
    map[FoldCase(Trim(view.substr(0, tab)))] =
        FoldCase(Trim(view.substr(tab + 1)));
  }
  return map;
}

}  // namespace sner
