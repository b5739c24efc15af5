#include "sner/eval.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sner/error.h"

namespace sner {

LabelSequence GoldDocument::labels() const {
  LabelSequence out;
  out.reserve(tokens.size());
  for (const GoldToken& t : tokens) out.push_back(t.label);
  return out;
}

std::string GoldDocument::Text() const {
  std::string text;
  for (size_t t = 0; t < tokens.size(); ++t) {
    if (t > 0) text += ' ';
    text += tokens[t].surface;
  }
  return text;
}

size_t GoldCorpus::token_count() const {
  size_t n = 0;
  for (const GoldDocument& doc : documents) n += doc.tokens.size();
  return n;
}

GoldCorpus ParseGold(std::string_view text, const std::string& source) {
  GoldCorpus corpus;
  GoldDocument current;
  auto flush = [&] {
    if (!current.tokens.empty()) corpus.documents.push_back(std::move(current));
    current = GoldDocument();
  };

  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string where = source + ":" + std::to_string(line_no);
    if (NormalizeWhitespace(line).empty()) {
      flush();
      continue;
    }
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": expected surface<TAB>label");
    }
    std::string surface = line.substr(0, tab);
    std::string label_name = line.substr(tab + 1);
    if (NormalizeWhitespace(surface) != surface ||
        surface.find(' ') != std::string::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": token surface contains whitespace");
    }
    GoldToken token{std::move(surface), std::nullopt};
    if (label_name != "O") {
      token.label = ParseLabel(label_name);
      if (!token.label) {
        throw Error(ErrorCode::kUnknownLabel,
                    where + ": unknown label '" + label_name + "'");
      }
    }
    current.tokens.push_back(std::move(token));
  }
  flush();
  return corpus;
}

GoldCorpus LoadGold(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMissingDataFile,
                "cannot open gold file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGold(buffer.str(), path.string());
}

double LabelCounts::precision() const {
  return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
}

double LabelCounts::recall() const {
  return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
}

double LabelCounts::f1() const {
  if (tp == 0) return 0.0;
  const double p = precision();
  const double r = recall();
  return 2.0 * p * r / (p + r);
}

double EvalReport::token_accuracy() const {
  return total == 0 ? 0.0 : static_cast<double>(correct) / total;
}

std::string FormatPercent(size_t num, size_t den) {
  if (den == 0) return "0.00%";
  // Hundredths of a percent, rounded half up.
  const unsigned long long scaled =
      (static_cast<unsigned long long>(num) * 20000ULL + den) / (2ULL * den);
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%llu.%02llu%%", scaled / 100, scaled % 100);
  return buf;
}

namespace {

struct Run {
  size_t begin;
  size_t end;
  TagLabel label;
  bool operator==(const Run&) const = default;
};

std::vector<Run> Runs(const LabelSequence& labels) {
  std::vector<Run> runs;
  for (size_t t = 0; t < labels.size();) {
    if (!labels[t]) {
      ++t;
      continue;
    }
    size_t end = t + 1;
    while (end < labels.size() && labels[end] == labels[t]) ++end;
    runs.push_back({t, end, *labels[t]});
    t = end;
  }
  return runs;
}

}  // namespace

EvalReport Score(const GoldCorpus& gold,
                 const std::vector<LabelSequence>& predictions) {
  if (predictions.size() != gold.documents.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "prediction count does not match gold document count");
  }
  EvalReport report;
  for (size_t d = 0; d < gold.documents.size(); ++d) {
    const LabelSequence expected = gold.documents[d].labels();
    const LabelSequence& predicted = predictions[d];
    if (predicted.size() != expected.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  "document " + std::to_string(d) +
                      ": prediction length does not match gold");
    }
    for (size_t t = 0; t < expected.size(); ++t) {
      ++report.total;
      if (expected[t] == predicted[t]) ++report.correct;
      if (expected[t] && expected[t] == predicted[t]) {
        ++report.per_label[static_cast<size_t>(*expected[t])].tp;
        continue;
      }
      if (expected[t]) ++report.per_label[static_cast<size_t>(*expected[t])].fn;
      if (predicted[t]) ++report.per_label[static_cast<size_t>(*predicted[t])].fp;
    }

    const std::vector<Run> gold_runs = Runs(expected);
    const std::vector<Run> pred_runs = Runs(predicted);
    size_t matched = 0;
    for (const Run& r : pred_runs) {
      if (std::find(gold_runs.begin(), gold_runs.end(), r) != gold_runs.end()) {
        ++matched;
      }
    }
    report.entities.tp += matched;
    report.entities.fp += pred_runs.size() - matched;
    report.entities.fn += gold_runs.size() - matched;
  }
  return report;
}

std::vector<LabelSequence> Predict(const Engine& engine,
                                   const GoldCorpus& gold) {
  std::vector<LabelSequence> out;
  out.reserve(gold.documents.size());
  for (const GoldDocument& doc : gold.documents) {
    const TaggedDocument tagged = engine.Tag(doc.Text());
    LabelSequence labels;
    size_t offset = 0;
    size_t e = 0;
    for (const GoldToken& token : doc.tokens) {
      const size_t begin = offset;
      const size_t end = offset + token.surface.size();
      while (e < tagged.entities.size() &&
             tagged.entities[e].bytes.end <= begin) {
        ++e;
      }
      std::optional<TagLabel> label;
      if (e < tagged.entities.size() && tagged.entities[e].bytes.begin < end) {
        label = tagged.entities[e].label;
      }
      labels.push_back(label);
      offset = end + 1;
    }
    out.push_back(std::move(labels));
  }
  return out;
}

EvalReport Evaluate(const Engine& engine, const GoldCorpus& gold) {
  if (gold.token_count() == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "gold corpus has no tokens");
  }
  return Score(gold, Predict(engine, gold));
}

std::string FormatReport(const EvalReport& report) {
  std::string out = "token accuracy: " +
                    FormatPercent(report.correct, report.total) + " (" +
                    std::to_string(report.correct) + "/" +
                    std::to_string(report.total) + ")\n";
  char line[160];
  std::snprintf(line, sizeof(line), "%-14s %6s %6s %6s %9s %7s %7s\n",
                "label", "tp", "fp", "fn", "precision", "recall", "f1");
  out += line;
  for (size_t l = 0; l < kNumLabels; ++l) {
    const LabelCounts& c = report.per_label[l];
    if (c.tp + c.fp + c.fn == 0) continue;
    std::snprintf(line, sizeof(line), "%-14s %6zu %6zu %6zu %9.4f %7.4f %7.4f\n",
                  std::string(LabelName(static_cast<TagLabel>(l))).c_str(),
                  c.tp, c.fp, c.fn, c.precision(), c.recall(), c.f1());
    out += line;
  }
  const LabelCounts& e = report.entities;
  std::snprintf(line, sizeof(line),
                "entity-level (exact span): precision %.4f recall %.4f f1 "
                "%.4f\n",
                e.precision(), e.recall(), e.f1());
  out += line;
  return out;
}

nlohmann::ordered_json ReportToJson(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["total"] = report.total;
  j["correct"] = report.correct;
  j["token_accuracy"] = report.token_accuracy();
  j["token_accuracy_percent"] = FormatPercent(report.correct, report.total);
  auto& labels = j["labels"] = nlohmann::ordered_json::object();
  for (size_t l = 0; l < kNumLabels; ++l) {
    const LabelCounts& c = report.per_label[l];
    labels[std::string(LabelName(static_cast<TagLabel>(l)))] = {
        {"tp", c.tp},
        {"fp", c.fp},
        {"fn", c.fn},
        {"precision", c.precision()},
        {"recall", c.recall()},
        {"f1", c.f1()},
    };
  }
  j["entity_level"] = {
      {"tp", report.entities.tp},
      {"fp", report.entities.fp},
      {"fn", report.entities.fn},
      {"precision", report.entities.precision()},
      {"recall", report.entities.recall()},
      {"f1", report.entities.f1()},
  };
  return j;
}

}  // namespace sner
