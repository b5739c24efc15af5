#include "sner/gazetteer.h"

#include <algorithm>
#include <fstream>
#include <tuple>

namespace sner {

namespace {

constexpr std::array<std::string_view, kNumCategories> kCategoryNames = {
    "PersonFirstName", "Surname",        "Title",        "Designation",
    "Location",        "Organization",   "Brand",        "Term",
    "Abbreviation",    "NumberWord",     "OrgKeyword",   "AmbiguousName",
    "MonthName",       "LetterName",     "Stopword",     "LocationSuffix",
    "PersonSuffix",    "TermSuffix",     "PersonMarker",
};

std::string_view TrimSpaces(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> SplitSpaces(const std::string& s) {
  std::vector<std::string> words;
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(' ', start);
    if (end == std::string::npos) end = s.size();
    if (end > start) words.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return words;
}

std::string EntryKey(const std::vector<std::string>& words,
                     Category category) {
  std::string key;
  for (const std::string& w : words) {
    key += w;
    key += ' ';
  }
  key += CategoryName(category);
  return key;
}

}  // namespace

std::string_view CategoryName(Category category) {
  return kCategoryNames[static_cast<size_t>(category)];
}

std::optional<Category> ParseCategory(std::string_view name) {
  for (size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

std::string Diagnostic::ToString() const {
  std::string out = source;
  out += ": ";
  out += ErrorCodeName(code);
  out += ": ";
  out += message;
  return out;
}

std::optional<Diagnostic> Gazetteer::Builder::Add(std::string_view surface,
                                                  Category category,
                                                  std::string source) {
  std::string normalized = NormalizeWhitespace(surface);
  if (normalized.empty()) {
    return Diagnostic{ErrorCode::kMalformedLine, source, "empty surface"};
  }
  std::vector<std::string> words = SplitSpaces(normalized);
  if (words.size() > kMaxEntryWords) {
    return Diagnostic{ErrorCode::kMalformedLine, source,
                      "surface '" + normalized + "' has " +
                          std::to_string(words.size()) +
                          " words; at most 3 allowed"};
  }
  for (std::string& w : words) {
    if (StripEdgeSpecials(w, specials_).core != w) {
      return Diagnostic{ErrorCode::kMalformedLine, source,
                        "word '" + w + "' has special characters at its edge"};
    }
    w = FoldCase(w);
  }

  std::string key = EntryKey(words, category);
  auto [it, inserted] = seen_.emplace(key, source);
  if (!inserted) {
    return Diagnostic{ErrorCode::kDuplicateEntry, source,
                      "'" + normalized + "' (" +
                          std::string(CategoryName(category)) +
                          ") already defined at " + it->second};
  }
  entries_.push_back(
      {std::move(normalized), std::move(words), category, std::move(source)});
  return std::nullopt;
}

std::optional<Diagnostic> Gazetteer::Builder::AddLine(
    std::string_view line, const std::string& source) {
  std::string_view trimmed = TrimSpaces(line);
  if (trimmed.empty() || trimmed.front() == '#') return std::nullopt;
  if (NormalizeWhitespace(trimmed).empty()) return std::nullopt;

  size_t tab = trimmed.find('\t');
  if (tab == std::string_view::npos ||
      trimmed.find('\t', tab + 1) != std::string_view::npos) {
    return Diagnostic{ErrorCode::kMalformedLine, source,
                      "expected 2 tab-separated fields"};
  }
  std::string_view category_name = TrimSpaces(trimmed.substr(tab + 1));
  std::optional<Category> category = ParseCategory(category_name);
  if (!category) {
    return Diagnostic{ErrorCode::kUnknownCategory, source,
                      "unknown category '" + std::string(category_name) +
                          "'"};
  }
  return Add(trimmed.substr(0, tab), *category, source);
}

Gazetteer Gazetteer::Builder::Build() && {
  return Gazetteer(std::move(entries_));
}

Gazetteer::Gazetteer(std::vector<GazetteerEntry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const GazetteerEntry& a, const GazetteerEntry& b) {
              return std::tie(a.words, a.category) <
                     std::tie(b.words, b.category);
            });
  for (size_t id = 0; id < entries_.size(); ++id) {
    by_first_word_[entries_[id].words.front()].push_back(id);
  }
  for (auto& [word, ids] : by_first_word_) {
    std::stable_sort(ids.begin(), ids.end(), [this](size_t a, size_t b) {
      const GazetteerEntry& ea = entries_[a];
      const GazetteerEntry& eb = entries_[b];
      if (ea.words.size() != eb.words.size()) {
        return ea.words.size() > eb.words.size();
      }
      return std::tie(ea.words, ea.category) < std::tie(eb.words, eb.category);
    });
  }
}

namespace {

template <typename OnDiagnostic>
Gazetteer ReadSources(const std::vector<std::filesystem::path>& sources,
                      const SpecialSet& specials, OnDiagnostic&& on_diag) {
  Gazetteer::Builder builder(specials);
  for (const auto& path : sources) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      on_diag(Diagnostic{ErrorCode::kMissingDataFile, path.string(),
                         "cannot open gazetteer file"});
      continue;
    }
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string source = path.string() + ":" + std::to_string(line_no);
      if (!IsValidUtf8(line)) {
        on_diag(Diagnostic{ErrorCode::kMalformedLine, source,
                           "line is not valid UTF-8"});
        continue;
      }
      if (auto diag = builder.AddLine(line, source)) on_diag(*diag);
    }
  }
  return std::move(builder).Build();
}

}  // namespace

Gazetteer Gazetteer::Load(const std::vector<std::filesystem::path>& sources,
                          const SpecialSet& specials) {
  return ReadSources(sources, specials, [](const Diagnostic& d) {
    throw Error(d.code, d.ToString());
  });
}

std::vector<Diagnostic> Gazetteer::Validate(
    const std::vector<std::filesystem::path>& sources,
    const SpecialSet& specials) {
  std::vector<Diagnostic> diagnostics;
  ReadSources(sources, specials,
              [&](const Diagnostic& d) { diagnostics.push_back(d); });
  return diagnostics;
}

std::optional<GazetteerMatch> Gazetteer::LookupLongest(
    std::span<const Token> tokens, size_t i, CategorySet categories) const {
  if (i >= tokens.size()) {
    throw Error(ErrorCode::kPositionOutOfRange,
                "lookup position " + std::to_string(i) +
                    " outside token stream of length " +
                    std::to_string(tokens.size()));
  }
  if (tokens[i].norm.empty()) return std::nullopt;
  auto it = by_first_word_.find(std::string_view(tokens[i].norm));
  if (it == by_first_word_.end()) return std::nullopt;

  const size_t available = std::min(kMaxEntryWords, tokens.size() - i);
  for (size_t id : it->second) {
    const GazetteerEntry& entry = entries_[id];
    const size_t k = entry.words.size();
    if (k > available || !categories.contains(entry.category)) continue;
    bool equal = true;
    for (size_t j = 1; j < k && equal; ++j) {
      equal = tokens[i + j].norm == entry.words[j];
    }
    if (equal) return GazetteerMatch{&entry, k};
  }
  return std::nullopt;
}

bool Gazetteer::Contains(std::string_view norm, Category category) const {
  return Contains(norm, CategorySet{category});
}

bool Gazetteer::Contains(std::string_view norm, CategorySet categories) const {
  if (norm.empty()) return false;
  auto it = by_first_word_.find(norm);
  if (it == by_first_word_.end()) return false;
  for (size_t id : it->second) {
    const GazetteerEntry& entry = entries_[id];
    if (entry.words.size() == 1 && categories.contains(entry.category)) {
      return true;
    }
  }
  return false;
}

std::vector<const GazetteerEntry*> Gazetteer::EntriesIn(
    Category category) const {
  std::vector<const GazetteerEntry*> out;
  for (const GazetteerEntry& entry : entries_) {
    if (entry.category == category) out.push_back(&entry);
  }
  return out;
}

CategoryCounts Gazetteer::Stats() const {
  CategoryCounts counts{};
  for (const GazetteerEntry& entry : entries_) {
    ++counts[static_cast<size_t>(entry.category)];
  }
  return counts;
}

}  // namespace sner
