#ifndef SNER_RULES_H_
#define SNER_RULES_H_

// One matcher per tagging rule. Every matcher is a pure function of the
// gazetteer, the token stream and a position; none of them mutate shared
// state, so they can run concurrently over positions and documents.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sner/gazetteer.h"
#include "sner/text.h"

namespace sner {

enum class TagLabel {
  kPerson,
  kLocation,
  kOrganization,
  kDate,
  kTime,
  kDesignation,
  kTerm,
  kAbbreviation,
  kNumber,
  kUrl,
  kEmail,
  kBrand,
};
inline constexpr size_t kNumLabels = 12;

std::string_view LabelName(TagLabel label);
std::optional<TagLabel> ParseLabel(std::string_view name);

enum class RuleId {
  kDateTime,          // R1
  kSuffix,            // R2
  kGazetteerName,     // R3
  kSurnameTrigger,    // R4
  kTitleDesignation,  // R5
  kPostposition,      // R6
  kNumberWords,       // R7
  kInitials,          // R8
  kAbbreviation,      // R9
  kOrgKeyword,        // R10
  kUrlEmail,
  kGazetteerDirect,
};
inline constexpr size_t kNumRules = 12;

std::string_view RuleName(RuleId rule);
std::optional<RuleId> ParseRule(std::string_view name);

// Lower is stronger.
int DefaultPriority(RuleId rule);

// Longest span any rule may propose; the organization rule may reach one
// token further.
inline constexpr size_t kMaxProposalLength = 3;
inline constexpr size_t kMaxOrgProposalLength = 4;

struct Proposal {
  size_t begin;  // token range [begin, end)
  size_t end;
  TagLabel label;
  RuleId rule;
  int priority;

  size_t length() const { return end - begin; }
  bool Overlaps(const Proposal& other) const {
    return begin < other.end && other.begin < end;
  }
  bool operator==(const Proposal&) const = default;
};

// Per-token flags marking tokens claimed by earlier stages.
using Coverage = std::vector<bool>;

struct SuffixRule {
  std::string suffix;  // normalized
  size_t chars;        // code points in suffix
  TagLabel label;
};

// Tables derived once from the reserved gazetteer categories.
struct RuleTables {
  std::vector<SuffixRule> suffixes;  // longest first

  static RuleTables From(const Gazetteer& gazetteer);
};

struct RuleContext {
  const Gazetteer& gazetteer;
  const RuleTables& tables;
  std::span<const Token> tokens;

  size_t size() const { return tokens.size(); }
  bool Has(size_t i, Category category) const {
    return gazetteer.Contains(tokens[i].norm, category);
  }
  bool IsWord(size_t i) const { return tokens[i].is_word(); }
  bool IsStopword(size_t i) const { return Has(i, Category::kStopword); }
  bool IsLetterName(size_t i) const { return Has(i, Category::kLetterName); }
};

// The postposition that marks a preceding name as a person.
inline constexpr std::string_view kGenitiveMarker = "جي";
// "year", as in "2016 سال".
inline constexpr std::string_view kYearWord = "سال";

// Exact multi-word matches on locations, organizations, brands, terms and
// abbreviations.
std::optional<Proposal> MatchGazetteerDirect(const RuleContext& ctx, size_t i);

// R1: numeric dates, times, and dates built from month names.
std::optional<Proposal> MatchDateTime(const RuleContext& ctx, size_t i);

std::optional<Proposal> MatchUrlEmail(const RuleContext& ctx, size_t i);
bool LooksLikeUrl(std::string_view s);
bool LooksLikeEmail(std::string_view s);

// R2
struct SuffixMatch {
  TagLabel label;
  std::string suffix;
};
std::optional<SuffixMatch> MatchSuffix(const RuleContext& ctx,
                                       const Token& token);
std::optional<Proposal> MatchSuffixAt(const RuleContext& ctx, size_t i);

// R3: gazetteer first names (up to three words), absorbing a directly
// following surname while the span stays within three tokens.
std::optional<Proposal> MatchGazetteerName(const RuleContext& ctx, size_t i);

// R4
std::optional<Proposal> MatchSurnameTrigger(const RuleContext& ctx, size_t i);

// R5: DESIGNATION over the title, PERSON over the name after it.
std::vector<Proposal> MatchTitleDesignation(const RuleContext& ctx, size_t i);

// R6. `prior` marks tokens already inside a proposal of an earlier rule.
std::optional<Proposal> ResolvePostposition(const RuleContext& ctx, size_t i,
                                            const Coverage& prior);

// R7
std::optional<Proposal> MatchNumberWords(const RuleContext& ctx, size_t i);

// R8
std::optional<Proposal> MatchInitials(const RuleContext& ctx, size_t i);

// R9. A bare letter-name run needs at least two letters.
std::optional<Proposal> MatchAbbreviation(const RuleContext& ctx, size_t i);

// R10. `tagged` marks tokens already assigned to an entity.
std::optional<Proposal> MatchOrgKeyword(const RuleContext& ctx, size_t i,
                                        const Coverage& tagged);

}  // namespace sner

#endif  // SNER_RULES_H_
