#ifndef SNER_CONFIG_H_
#define SNER_CONFIG_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "sner/rules.h"
#include "sner/text.h"

namespace sner {

// Everything needed to build an Engine. The on-disk form is a flat
// `key = value` file:
//
//   gazetteer = persons.tsv        (repeatable)
//   suffixes  = suffixes.tsv
//   stopwords = stopwords.tsv
//   synonyms  = variants.tsv       (optional; variant<TAB>canonical)
//   specials  = ، ۔ . , ; ...      (optional; space separated)
//   rule.R6_Postposition = off
//   priority.R10_OrgKeyword = 9
//
// Relative paths resolve against the config file's directory.
struct EngineConfig {
  std::vector<std::filesystem::path> gazetteers;
  std::filesystem::path suffixes;
  std::filesystem::path stopwords;
  std::optional<std::filesystem::path> synonyms;
  SpecialSet specials;
  std::array<bool, kNumRules> enabled;
  std::array<int, kNumRules> priorities;

  EngineConfig();

  void Enable(RuleId rule, bool on) { enabled[static_cast<size_t>(rule)] = on; }

  static EngineConfig Load(const std::filesystem::path& path);
  static EngineConfig Parse(std::string_view text,
                            const std::filesystem::path& base_dir);
};

// Directory holding the shipped data files and default.conf.
std::filesystem::path DefaultDataDir();
std::filesystem::path DefaultConfigPath();

// Reads a variant<TAB>canonical file.
SynonymMap LoadSynonyms(const std::filesystem::path& path);

}  // namespace sner

#endif  // SNER_CONFIG_H_
