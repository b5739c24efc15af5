#include "sner/pipeline.h"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "sner/error.h"

namespace sner {

namespace {

void MarkCoverage(Coverage& coverage, const Proposal& p) {
  for (size_t t = p.begin; t < p.end && t < coverage.size(); ++t) {
    coverage[t] = true;
  }
}

// Rules whose proposals gate the postposition rule.
bool PrecedesPostposition(RuleId rule) {
  switch (rule) {
    case RuleId::kGazetteerDirect:
    case RuleId::kUrlEmail:
    case RuleId::kDateTime:
    case RuleId::kSuffix:
    case RuleId::kGazetteerName:
    case RuleId::kSurnameTrigger:
    case RuleId::kTitleDesignation:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<Proposal> ResolveConflicts(std::span<const Proposal> proposals) {
  std::vector<size_t> order(proposals.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const Proposal& pa = proposals[a];
    const Proposal& pb = proposals[b];
    return std::make_tuple(pa.priority, -static_cast<long>(pa.length()),
                           pa.begin, pa.rule, pa.label) <
           std::make_tuple(pb.priority, -static_cast<long>(pb.length()),
                           pb.begin, pb.rule, pb.label);
  });

  size_t extent = 0;
  for (const Proposal& p : proposals) extent = std::max(extent, p.end);
  std::vector<bool> taken(extent, false);
  std::vector<Proposal> accepted;
  for (size_t idx : order) {
    const Proposal& p = proposals[idx];
    bool clash = false;
    for (size_t t = p.begin; t < p.end && !clash; ++t) clash = taken[t];
    if (clash) continue;
    for (size_t t = p.begin; t < p.end; ++t) taken[t] = true;
    accepted.push_back(p);
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const Proposal& a, const Proposal& b) {
              return a.begin < b.begin;
            });
  return accepted;
}

TaggedDocument MakeDocument(TokenStream tokens,
                            std::span<const Proposal> accepted) {
  TaggedDocument doc;
  std::vector<bool> covered(tokens.size(), false);
  for (const Proposal& p : accepted) {
    EntitySpan span;
    span.begin_token = p.begin;
    span.end_token = p.end;
    span.bytes = {tokens[p.begin].span.begin, tokens[p.end - 1].span.end};
    span.label = p.label;
    span.rule = p.rule;
    span.surface = tokens.source.substr(span.bytes.begin, span.bytes.size());
    doc.entities.push_back(std::move(span));
    for (size_t t = p.begin; t < p.end; ++t) covered[t] = true;
  }
  for (size_t t = 0; t < tokens.size(); ++t) {
    if (!covered[t]) doc.untagged.push_back(t);
  }
  doc.tokens = std::move(tokens);
  return doc;
}

Engine Engine::Build(const EngineConfig& config) {
  auto require = [](const std::filesystem::path& path) {
    if (path.empty() || !std::filesystem::is_regular_file(path)) {
      throw Error(ErrorCode::kMissingDataFile,
                  "data file not found: " + path.string());
    }
  };
  std::vector<std::filesystem::path> sources = config.gazetteers;
  sources.push_back(config.suffixes);
  sources.push_back(config.stopwords);
  for (const auto& path : sources) require(path);
  if (config.synonyms) require(*config.synonyms);

  Engine engine;
  engine.gazetteer_ = Gazetteer::Load(sources, config.specials);
  engine.tables_ = RuleTables::From(engine.gazetteer_);
  engine.text_options_.specials = config.specials;
  if (config.synonyms) {
    engine.text_options_.synonyms = LoadSynonyms(*config.synonyms);
  }
  engine.enabled_ = config.enabled;
  engine.priorities_ = config.priorities;
  return engine;
}

TokenStream Engine::Tokenize(std::string_view raw) const {
  return sner::Tokenize(raw, text_options_);
}

std::vector<Proposal> Engine::Propose(const TokenStream& stream) const {
  const RuleContext ctx{gazetteer_, tables_, stream.tokens};
  const size_t n = stream.size();
  std::vector<Proposal> proposals;

  auto add = [&](std::optional<Proposal> p) {
    if (!p || !enabled(p->rule)) return;
    p->priority = priority(p->rule);
    proposals.push_back(*p);
  };

  // Cascade order: gazetteer search, date/time/url/email, person rules,
  // suffixes, gazetteer names, initials, number words, abbreviations.
  for (size_t i = 0; i < n; ++i) {
    if (enabled(RuleId::kGazetteerDirect)) add(MatchGazetteerDirect(ctx, i));
    if (enabled(RuleId::kDateTime)) add(MatchDateTime(ctx, i));
    if (enabled(RuleId::kUrlEmail)) add(MatchUrlEmail(ctx, i));
    if (enabled(RuleId::kTitleDesignation)) {
      for (const Proposal& p : MatchTitleDesignation(ctx, i)) add(p);
    }
    if (enabled(RuleId::kSurnameTrigger)) {
      auto p = MatchSurnameTrigger(ctx, i);
      add(p);
      // The surname alone stays available if the wider span loses.
      if (p && p->length() == 2) {
        add(Proposal{i, i + 1, TagLabel::kPerson, RuleId::kSurnameTrigger, 0});
      }
    }
    if (enabled(RuleId::kSuffix)) add(MatchSuffixAt(ctx, i));
    if (enabled(RuleId::kGazetteerName)) add(MatchGazetteerName(ctx, i));
    if (enabled(RuleId::kInitials)) add(MatchInitials(ctx, i));
    if (enabled(RuleId::kNumberWords)) add(MatchNumberWords(ctx, i));
    if (enabled(RuleId::kAbbreviation)) add(MatchAbbreviation(ctx, i));
  }

  // Pattern-verified spans (dates, times, URLs, e-mails) are never claimed
  // by a plain gazetteer hit, so growing the gazetteer cannot erase them.
  Coverage patterns(n, false);
  for (const Proposal& p : proposals) {
    if (p.rule == RuleId::kDateTime || p.rule == RuleId::kUrlEmail) {
      MarkCoverage(patterns, p);
    }
  }
  std::erase_if(proposals, [&](const Proposal& p) {
    if (p.rule != RuleId::kGazetteerDirect) return false;
    for (size_t t = p.begin; t < p.end; ++t) {
      if (patterns[t]) return true;
    }
    return false;
  });

  if (enabled(RuleId::kPostposition)) {
    Coverage prior(n, false);
    for (const Proposal& p : proposals) {
      if (PrecedesPostposition(p.rule)) MarkCoverage(prior, p);
    }
    for (size_t i = 0; i < n; ++i) add(ResolvePostposition(ctx, i, prior));
  }

  if (enabled(RuleId::kOrgKeyword)) {
    std::vector<Proposal> earlier;
    for (const Proposal& p : proposals) {
      if (p.rule != RuleId::kPostposition) earlier.push_back(p);
    }
    Coverage tagged(n, false);
    for (const Proposal& p : ResolveConflicts(earlier)) MarkCoverage(tagged, p);
    for (size_t i = 0; i < n; ++i) add(MatchOrgKeyword(ctx, i, tagged));
  }
  return proposals;
}

TaggedDocument Engine::Tag(std::string_view raw) const {
  TokenStream stream = Tokenize(raw);
  std::vector<Proposal> proposals = Propose(stream);
  std::vector<Proposal> accepted = ResolveConflicts(proposals);
  return MakeDocument(std::move(stream), accepted);
}

}  // namespace sner
