#ifndef SNER_RENDER_H_
#define SNER_RENDER_H_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sner/pipeline.h"

namespace sner {

enum class OutputFormat { kInline, kTabular, kJsonl };

// Throws Error(kUnknownFormat) for anything but inline, tabular or jsonl.
OutputFormat ParseFormat(std::string_view name);

// inline:  source text with <LABEL>...</LABEL> around each entity
// tabular: one `surface<TAB>LABEL-or-O` line per token
// jsonl:   one JSON object per document, terminated by a newline
std::string Render(const TaggedDocument& doc, OutputFormat format);

// JSON object for one document: {"text": ..., "entities": [...]} where each
// entity carries start_byte, end_byte, start_token, end_token, label, rule
// and surface.
nlohmann::ordered_json DocumentToJson(const TaggedDocument& doc);
nlohmann::ordered_json EntityToJson(const EntitySpan& span);
// Throws std::exception subclasses on malformed input.
EntitySpan EntityFromJson(const nlohmann::json& j);

struct ParsedDocument {
  std::string text;
  std::vector<EntitySpan> entities;
};
ParsedDocument ParseJsonlDocument(std::string_view line);

}  // namespace sner

#endif  // SNER_RENDER_H_
