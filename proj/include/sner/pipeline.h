#ifndef SNER_PIPELINE_H_
#define SNER_PIPELINE_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sner/config.h"
#include "sner/gazetteer.h"
#include "sner/rules.h"
#include "sner/text.h"

namespace sner {

struct EntitySpan {
  size_t begin_token;
  size_t end_token;
  ByteSpan bytes;
  TagLabel label;
  RuleId rule;
  std::string surface;

  bool operator==(const EntitySpan&) const = default;
};

// Every token index appears either inside exactly one entity or in
// `untagged`.
struct TaggedDocument {
  TokenStream tokens;
  std::vector<EntitySpan> entities;  // disjoint, sorted by position
  std::vector<size_t> untagged;

  const std::string& source() const { return tokens.source; }
};

// Greedy overlap resolution: proposals are visited by (priority, longer
// first, earlier first) and kept when they overlap nothing kept so far.
// The result is sorted by start position.
std::vector<Proposal> ResolveConflicts(std::span<const Proposal> proposals);

TaggedDocument MakeDocument(TokenStream tokens,
                            std::span<const Proposal> accepted);

class Engine {
 public:
  // Loads every data file named by the config. Fails with MissingDataFile
  // or the gazetteer's load error.
  static Engine Build(const EngineConfig& config);

  TaggedDocument Tag(std::string_view raw) const;

  // All proposals the enabled rules make, before conflict resolution.
  std::vector<Proposal> Propose(const TokenStream& tokens) const;

  TokenStream Tokenize(std::string_view raw) const;

  const Gazetteer& gazetteer() const { return gazetteer_; }
  const RuleTables& tables() const { return tables_; }
  bool enabled(RuleId rule) const {
    return enabled_[static_cast<size_t>(rule)];
  }
  int priority(RuleId rule) const {
    return priorities_[static_cast<size_t>(rule)];
  }

 private:
  Engine() = default;

  Gazetteer gazetteer_;
  RuleTables tables_;
  TextOptions text_options_;
  std::array<bool, kNumRules> enabled_{};
  std::array<int, kNumRules> priorities_{};
};

}  // namespace sner

#endif  // SNER_PIPELINE_H_
