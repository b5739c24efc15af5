#include "sner/rules.h"

#include <algorithm>
#include <array>

namespace sner {

namespace {

constexpr std::array<std::string_view, kNumLabels> kLabelNames = {
    "PERSON", "LOCATION",     "ORGANIZATION", "DATE",   "TIME", "DESIGNATION",
    "TERM",   "ABBREVIATION", "NUMBER",       "URL",    "EMAIL", "BRAND",
};

constexpr std::array<std::string_view, kNumRules> kRuleNames = {
    "R1_DateTime",     "R2_Suffix",         "R3_GazetteerName",
    "R4_SurnameTrigger", "R5_TitleDesignation", "R6_Postposition",
    "R7_NumberWords",  "R8_Initials",       "R9_Abbreviation",
    "R10_OrgKeyword",  "R_UrlEmail",        "R_GazetteerDirect",
};

constexpr std::array<int, kNumRules> kDefaultPriorities = {
    1, 7, 2, 4, 3, 10, 8, 5, 6, 9, 1, 0,
};

Proposal Make(size_t begin, size_t end, TagLabel label, RuleId rule) {
  return {begin, end, label, rule, DefaultPriority(rule)};
}

// Parses a run of digits in any supported script. Returns the value and the
// digit count, or nullopt when a non-digit appears.
struct Number {
  int value;
  size_t digits;
};

std::optional<Number> ParseDigits(std::u32string_view s) {
  if (s.empty() || s.size() > 4) return std::nullopt;
  int value = 0;
  for (char32_t cp : s) {
    int d = DigitValue(cp);
    if (d < 0) return std::nullopt;
    value = value * 10 + d;
  }
  return Number{value, s.size()};
}

std::vector<std::u32string_view> Split(std::u32string_view s, char32_t sep) {
  std::vector<std::u32string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::u32string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool IsDay(const std::optional<Number>& n) {
  return n && n->digits <= 2 && n->value >= 1 && n->value <= 31;
}

bool IsYear(const std::optional<Number>& n) { return n && n->digits == 4; }

bool IsNumericDate(std::u32string_view s) {
  for (char32_t sep : {U'.', U'/'}) {
    auto parts = Split(s, sep);
    if (parts.size() != 3) continue;
    auto day = ParseDigits(parts[0]);
    auto month = ParseDigits(parts[1]);
    auto year = ParseDigits(parts[2]);
    if (IsDay(day) && month && month->digits <= 2 && month->value >= 1 &&
        month->value <= 12 && IsYear(year)) {
      return true;
    }
  }
  return false;
}

bool IsClockTime(std::u32string_view s) {
  auto parts = Split(s, U':');
  if (parts.size() != 2) return false;
  auto hour = ParseDigits(parts[0]);
  auto minute = ParseDigits(parts[1]);
  return hour && hour->digits <= 2 && hour->value <= 23 && minute &&
         minute->digits == 2 && minute->value <= 59;
}

std::optional<Number> TokenNumber(const Token& token) {
  if (token.kind != TokenKind::kNumber) return std::nullopt;
  std::u32string cps;
  for (char32_t cp : ToCodePoints(token.surface)) cps.push_back(cp);
  return ParseDigits(cps);
}

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool StartsWithCaseless(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && FoldCase(s.substr(0, prefix.size())) == prefix;
}

}  // namespace

std::string_view LabelName(TagLabel label) {
  return kLabelNames[static_cast<size_t>(label)];
}

std::optional<TagLabel> ParseLabel(std::string_view name) {
  for (size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return static_cast<TagLabel>(i);
  }
  return std::nullopt;
}

std::string_view RuleName(RuleId rule) {
  return kRuleNames[static_cast<size_t>(rule)];
}

std::optional<RuleId> ParseRule(std::string_view name) {
  for (size_t i = 0; i < kRuleNames.size(); ++i) {
    if (kRuleNames[i] == name) return static_cast<RuleId>(i);
  }
  return std::nullopt;
}

int DefaultPriority(RuleId rule) {
  return kDefaultPriorities[static_cast<size_t>(rule)];
}

RuleTables RuleTables::From(const Gazetteer& gazetteer) {
  RuleTables tables;
  const std::pair<Category, TagLabel> kinds[] = {
      {Category::kLocationSuffix, TagLabel::kLocation},
      {Category::kPersonSuffix, TagLabel::kPerson},
      {Category::kTermSuffix, TagLabel::kTerm},
  };
  for (auto [category, label] : kinds) {
    for (const GazetteerEntry* entry : gazetteer.EntriesIn(category)) {
      if (entry->words.size() != 1) continue;
      const std::string& suffix = entry->words.front();
      tables.suffixes.push_back({suffix, CodePointCount(suffix), label});
    }
  }
  std::sort(tables.suffixes.begin(), tables.suffixes.end(),
            [](const SuffixRule& a, const SuffixRule& b) {
              if (a.chars != b.chars) return a.chars > b.chars;
              if (a.suffix != b.suffix) return a.suffix < b.suffix;
              return a.label < b.label;
            });
  return tables;
}

std::optional<Proposal> MatchGazetteerDirect(const RuleContext& ctx,
                                             size_t i) {
  static const CategorySet kDirect = {
      Category::kLocation, Category::kOrganization, Category::kBrand,
      Category::kTerm, Category::kAbbreviation};
  auto match = ctx.gazetteer.LookupLongest(ctx.tokens, i, kDirect);
  if (!match) return std::nullopt;
  TagLabel label;
  switch (match->entry->category) {
    case Category::kLocation: label = TagLabel::kLocation; break;
    case Category::kOrganization: label = TagLabel::kOrganization; break;
    case Category::kBrand: label = TagLabel::kBrand; break;
    case Category::kTerm: label = TagLabel::kTerm; break;
    default: label = TagLabel::kAbbreviation; break;
  }
  return Make(i, i + match->length, label, RuleId::kGazetteerDirect);
}

std::optional<Proposal> MatchDateTime(const RuleContext& ctx, size_t i) {
  const Token& token = ctx.tokens[i];
  if (token.kind != TokenKind::kNumber) return std::nullopt;

  std::u32string cps;
  for (char32_t cp : ToCodePoints(token.surface)) cps.push_back(cp);
  if (IsNumericDate(cps)) {
    return Make(i, i + 1, TagLabel::kDate, RuleId::kDateTime);
  }
  if (IsClockTime(cps)) {
    return Make(i, i + 1, TagLabel::kTime, RuleId::kDateTime);
  }

  auto number = ParseDigits(cps);
  const size_t n = ctx.size();
  if (IsDay(number) && i + 1 < n && ctx.Has(i + 1, Category::kMonthName)) {
    if (i + 2 < n && IsYear(TokenNumber(ctx.tokens[i + 2]))) {
      return Make(i, i + 3, TagLabel::kDate, RuleId::kDateTime);
    }
    return Make(i, i + 2, TagLabel::kDate, RuleId::kDateTime);
  }
  if (IsYear(number) && i + 1 < n && ctx.tokens[i + 1].norm == kYearWord) {
    return Make(i, i + 2, TagLabel::kDate, RuleId::kDateTime);
  }
  return std::nullopt;
}

bool LooksLikeUrl(std::string_view s) {
  if (StartsWithCaseless(s, "www.")) return s.size() > 4;
  size_t sep = s.find("://");
  if (sep == std::string_view::npos || sep == 0) return false;
  if (!IsAsciiAlpha(s[0])) return false;
  for (size_t k = 1; k < sep; ++k) {
    char c = s[k];
    if (!IsAsciiAlpha(c) && !(c >= '0' && c <= '9') && c != '+' && c != '-' &&
        c != '.') {
      return false;
    }
  }
  return s.size() > sep + 3;
}

bool LooksLikeEmail(std::string_view s) {
  size_t at = s.find('@');
  if (at == std::string_view::npos || at == 0) return false;
  if (s.find('@', at + 1) != std::string_view::npos) return false;
  std::string_view domain = s.substr(at + 1);
  if (domain.find('.') == std::string_view::npos) return false;
  // Every dot-separated label must be non-empty.
  size_t start = 0;
  while (true) {
    size_t dot = domain.find('.', start);
    size_t end = dot == std::string_view::npos ? domain.size() : dot;
    if (end == start) return false;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return true;
}

std::optional<Proposal> MatchUrlEmail(const RuleContext& ctx, size_t i) {
  const Token& token = ctx.tokens[i];
  if (token.kind == TokenKind::kPunctuation) return std::nullopt;
  if (LooksLikeUrl(token.surface)) {
    return Make(i, i + 1, TagLabel::kUrl, RuleId::kUrlEmail);
  }
  if (LooksLikeEmail(token.surface)) {
    return Make(i, i + 1, TagLabel::kEmail, RuleId::kUrlEmail);
  }
  return std::nullopt;
}

std::optional<SuffixMatch> MatchSuffix(const RuleContext& ctx,
                                       const Token& token) {
  if (!token.is_word()) return std::nullopt;
  if (ctx.gazetteer.Contains(token.norm, Category::kPersonMarker)) {
    return SuffixMatch{TagLabel::kPerson, token.norm};
  }
  const std::string& norm = token.norm;
  const size_t chars = CodePointCount(norm);
  for (const SuffixRule& rule : ctx.tables.suffixes) {
    if (rule.suffix.size() >= norm.size() || chars < rule.chars + 2) continue;
    if (norm.compare(norm.size() - rule.suffix.size(), rule.suffix.size(),
                     rule.suffix) == 0) {
      return SuffixMatch{rule.label, rule.suffix};
    }
  }
  return std::nullopt;
}

std::optional<Proposal> MatchSuffixAt(const RuleContext& ctx, size_t i) {
  auto match = MatchSuffix(ctx, ctx.tokens[i]);
  if (!match) return std::nullopt;
  return Make(i, i + 1, match->label, RuleId::kSuffix);
}

std::optional<Proposal> MatchGazetteerName(const RuleContext& ctx, size_t i) {
  auto match = ctx.gazetteer.LookupLongest(ctx.tokens, i,
                                           {Category::kPersonFirstName});
  if (!match) return std::nullopt;
  size_t end = i + match->length;
  if (end < ctx.size() && match->length < kMaxProposalLength &&
      ctx.Has(end, Category::kSurname)) {
    ++end;
  }
  return Make(i, end, TagLabel::kPerson, RuleId::kGazetteerName);
}

std::optional<Proposal> MatchSurnameTrigger(const RuleContext& ctx, size_t i) {
  if (!ctx.Has(i, Category::kSurname)) return std::nullopt;
  if (i > 0) {
    // Initials before a surname belong to the initials rule.
    if (ctx.IsLetterName(i - 1)) return std::nullopt;
    if (ctx.IsWord(i - 1) && !ctx.IsStopword(i - 1)) {
      return Make(i - 1, i + 1, TagLabel::kPerson, RuleId::kSurnameTrigger);
    }
  }
  return Make(i, i + 1, TagLabel::kPerson, RuleId::kSurnameTrigger);
}

std::vector<Proposal> MatchTitleDesignation(const RuleContext& ctx, size_t i) {
  static const CategorySet kTitles = {Category::kTitle, Category::kDesignation};
  static const CategorySet kNames = {Category::kPersonFirstName,
                                     Category::kSurname,
                                     Category::kAmbiguousName};
  std::vector<Proposal> out;
  auto match = ctx.gazetteer.LookupLongest(ctx.tokens, i, kTitles);
  if (!match) return out;
  const size_t title_end = i + match->length;
  out.push_back(Make(i, title_end, TagLabel::kDesignation,
                     RuleId::kTitleDesignation));

  auto can_be_name = [&](size_t t) {
    return t < ctx.size() && ctx.IsWord(t) && !ctx.IsStopword(t) &&
           !ctx.Has(t, Category::kOrgKeyword) &&
           !ctx.gazetteer.LookupLongest(ctx.tokens, t, kTitles);
  };
  if (!can_be_name(title_end)) return out;
  size_t name_end = title_end + 1;
  if (can_be_name(name_end) &&
      ctx.gazetteer.Contains(ctx.tokens[name_end].norm, kNames)) {
    ++name_end;
  }
  out.push_back(Make(title_end, name_end, TagLabel::kPerson,
                     RuleId::kTitleDesignation));
  return out;
}

std::optional<Proposal> ResolvePostposition(const RuleContext& ctx, size_t i,
                                            const Coverage& prior) {
  static const CategorySet kNames = {Category::kAmbiguousName,
                                     Category::kPersonFirstName};
  if (i < prior.size() && prior[i]) return std::nullopt;
  if (!ctx.gazetteer.Contains(ctx.tokens[i].norm, kNames)) return std::nullopt;
  if (i + 1 >= ctx.size() || ctx.tokens[i + 1].norm != kGenitiveMarker) {
    return std::nullopt;
  }
  return Make(i, i + 1, TagLabel::kPerson, RuleId::kPostposition);
}

std::optional<Proposal> MatchNumberWords(const RuleContext& ctx, size_t i) {
  if (!ctx.Has(i, Category::kNumberWord)) return std::nullopt;
  size_t end = i + 1;
  while (end < ctx.size() && end - i < kMaxProposalLength &&
         ctx.Has(end, Category::kNumberWord)) {
    ++end;
  }
  return Make(i, end, TagLabel::kNumber, RuleId::kNumberWords);
}

std::optional<Proposal> MatchInitials(const RuleContext& ctx, size_t i) {
  // At most two initials so that initials plus surname fit in three tokens.
  for (size_t j = i + 1; j < ctx.size() && j < i + kMaxProposalLength; ++j) {
    if (!ctx.IsLetterName(j - 1)) return std::nullopt;
    if (ctx.Has(j, Category::kSurname)) {
      return Make(i, j + 1, TagLabel::kPerson, RuleId::kInitials);
    }
  }
  return std::nullopt;
}

std::optional<Proposal> MatchAbbreviation(const RuleContext& ctx, size_t i) {
  auto match = ctx.gazetteer.LookupLongest(ctx.tokens, i,
                                           {Category::kAbbreviation});
  if (match) {
    return Make(i, i + match->length, TagLabel::kAbbreviation,
                RuleId::kAbbreviation);
  }
  size_t end = i;
  while (end < ctx.size() && end - i < kMaxProposalLength &&
         ctx.IsLetterName(end)) {
    ++end;
  }
  if (end - i < 2) return std::nullopt;
  return Make(i, end, TagLabel::kAbbreviation, RuleId::kAbbreviation);
}

std::optional<Proposal> MatchOrgKeyword(const RuleContext& ctx, size_t i,
                                        const Coverage& tagged) {
  if (!ctx.Has(i, Category::kOrgKeyword)) return std::nullopt;
  // Skip keywords inside a known organization name.
  const size_t first = i >= kMaxEntryWords - 1 ? i - (kMaxEntryWords - 1) : 0;
  for (size_t s = first; s <= i; ++s) {
    auto org = ctx.gazetteer.LookupLongest(ctx.tokens, s,
                                           {Category::kOrganization});
    if (org && s + org->length > i) return std::nullopt;
  }

  size_t begin = i;
  while (begin > 0 && i - begin < 2) {
    const size_t t = begin - 1;
    const bool is_tagged = t < tagged.size() && tagged[t];
    if (!ctx.IsWord(t) || is_tagged || ctx.IsStopword(t)) break;
    begin = t;
  }
  return Make(begin, i + 1, TagLabel::kOrganization, RuleId::kOrgKeyword);
}

}  // namespace sner
