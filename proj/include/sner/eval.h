#ifndef SNER_EVAL_H_
#define SNER_EVAL_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sner/pipeline.h"

namespace sner {

// nullopt stands for the outside label O.
using LabelSequence = std::vector<std::optional<TagLabel>>;

struct GoldToken {
  std::string surface;
  std::optional<TagLabel> label;
};

struct GoldDocument {
  std::vector<GoldToken> tokens;

  LabelSequence labels() const;
  // Surfaces joined by single spaces.
  std::string Text() const;
};

struct GoldCorpus {
  std::vector<GoldDocument> documents;

  size_t token_count() const;
};

// Token-per-line TSV (`surface<TAB>LABEL` or `surface<TAB>O`); blank lines
// separate documents.
GoldCorpus ParseGold(std::string_view text, const std::string& source);
GoldCorpus LoadGold(const std::filesystem::path& path);

struct LabelCounts {
  size_t tp = 0;
  size_t fp = 0;
  size_t fn = 0;

  // 0/0 is defined as 0 for all three.
  double precision() const;
  double recall() const;
  double f1() const;
};

struct EvalReport {
  size_t total = 0;
  size_t correct = 0;
  std::array<LabelCounts, kNumLabels> per_label{};  // token level
  // Exact-match counts over maximal same-label runs. Reported alongside the
  // token accuracy; not part of the headline figure.
  LabelCounts entities;

  double token_accuracy() const;
};

// Percentage of num/den with two decimals, rounded half up using integer
// arithmetic: 924/936 -> "98.72%".
std::string FormatPercent(size_t num, size_t den);

// Compares aligned label sequences, one per gold document.
EvalReport Score(const GoldCorpus& gold,
                 const std::vector<LabelSequence>& predictions);

// Tags each gold document's text and maps entity labels back onto the gold
// tokens (a gold token takes the label of the entity overlapping it).
std::vector<LabelSequence> Predict(const Engine& engine,
                                   const GoldCorpus& gold);

// Throws Error(kEmptyCorpus) when the corpus has no tokens.
EvalReport Evaluate(const Engine& engine, const GoldCorpus& gold);

std::string FormatReport(const EvalReport& report);
nlohmann::ordered_json ReportToJson(const EvalReport& report);

}  // namespace sner

#endif  // SNER_EVAL_H_
