#include "sner/render.h"

#include "sner/error.h"

namespace sner {

using nlohmann::json;
using nlohmann::ordered_json;

OutputFormat ParseFormat(std::string_view name) {
  if (name == "inline") return OutputFormat::kInline;
  if (name == "tabular") return OutputFormat::kTabular;
  if (name == "jsonl") return OutputFormat::kJsonl;
  throw Error(ErrorCode::kUnknownFormat,
              "unknown output format '" + std::string(name) + "'");
}

ordered_json EntityToJson(const EntitySpan& span) {
  ordered_json j;
  j["start_byte"] = span.bytes.begin;
  j["end_byte"] = span.bytes.end;
  j["start_token"] = span.begin_token;
  j["end_token"] = span.end_token;
  j["label"] = LabelName(span.label);
  j["rule"] = RuleName(span.rule);
  j["surface"] = span.surface;
  return j;
}

EntitySpan EntityFromJson(const json& j) {
  EntitySpan span;
  span.bytes.begin = j.at("start_byte").get<size_t>();
  span.bytes.end = j.at("end_byte").get<size_t>();
  span.begin_token = j.at("start_token").get<size_t>();
  span.end_token = j.at("end_token").get<size_t>();
  auto label = ParseLabel(j.at("label").get<std::string>());
  if (!label) throw std::invalid_argument("unknown label");
  auto rule = ParseRule(j.at("rule").get<std::string>());
  if (!rule) throw std::invalid_argument("unknown rule");
  span.label = *label;
  span.rule = *rule;
  span.surface = j.at("surface").get<std::string>();
  if (span.bytes.end <= span.bytes.begin ||
      span.end_token <= span.begin_token) {
    throw std::invalid_argument("empty entity span");
  }
  return span;
}

ordered_json DocumentToJson(const TaggedDocument& doc) {
  ordered_json j;
  j["text"] = doc.source();
  j["entities"] = ordered_json::array();
  for (const EntitySpan& span : doc.entities) {
    j["entities"].push_back(EntityToJson(span));
  }
  return j;
}

ParsedDocument ParseJsonlDocument(std::string_view line) {
  json j = json::parse(line);
  ParsedDocument doc;
  doc.text = j.at("text").get<std::string>();
  for (const json& e : j.at("entities")) {
    doc.entities.push_back(EntityFromJson(e));
  }
  return doc;
}

std::string Render(const TaggedDocument& doc, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::kInline: {
      const std::string& text = doc.source();
      size_t pos = 0;
      for (const EntitySpan& span : doc.entities) {
        const std::string_view label = LabelName(span.label);
        out.append(text, pos, span.bytes.begin - pos);
        out += '<';
        out += label;
        out += '>';
        out += span.surface;
        out += "</";
        out += label;
        out += '>';
        pos = span.bytes.end;
      }
      out.append(text, pos, std::string::npos);
      break;
    }
    case OutputFormat::kTabular: {
      std::vector<std::string_view> labels(doc.tokens.size(), "O");
      for (const EntitySpan& span : doc.entities) {
        for (size_t t = span.begin_token; t < span.end_token; ++t) {
          labels[t] = LabelName(span.label);
        }
      }
      for (size_t t = 0; t < doc.tokens.size(); ++t) {
        out += doc.tokens[t].surface;
        out += '\t';
        out += labels[t];
        out += '\n';
      }
      break;
    }
    case OutputFormat::kJsonl:
      out = DocumentToJson(doc).dump(-1, ' ', false,
                                     json::error_handler_t::replace);
      out += '\n';
      break;
  }
  return out;
}

}  // namespace sner
