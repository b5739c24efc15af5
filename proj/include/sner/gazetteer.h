#ifndef SNER_GAZETTEER_H_
#define SNER_GAZETTEER_H_

#include <array>
#include <bitset>
#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sner/error.h"
#include "sner/text.h"

namespace sner {

// The first twelve categories hold entity surface forms. The rest are
// reserved for the rule tables (months, letter names, stopwords, suffixes)
// which share the same file format.
enum class Category {
  kPersonFirstName,
  kSurname,
  kTitle,
  kDesignation,
  kLocation,
  kOrganization,
  kBrand,
  kTerm,
  kAbbreviation,
  kNumberWord,
  kOrgKeyword,
  kAmbiguousName,
  kMonthName,
  kLetterName,
  kStopword,
  kLocationSuffix,
  kPersonSuffix,
  kTermSuffix,
  kPersonMarker,
};

inline constexpr size_t kNumCategories = 19;
inline constexpr size_t kNumEntityCategories = 12;

std::string_view CategoryName(Category category);
std::optional<Category> ParseCategory(std::string_view name);

class CategorySet {
 public:
  CategorySet() = default;
  CategorySet(std::initializer_list<Category> categories) {
    for (Category c : categories) bits_.set(static_cast<size_t>(c));
  }
  static CategorySet All() {
    CategorySet s;
    s.bits_.set();
    return s;
  }

  bool contains(Category c) const { return bits_.test(static_cast<size_t>(c)); }
  void insert(Category c) { bits_.set(static_cast<size_t>(c)); }

 private:
  std::bitset<kNumCategories> bits_;
};

// Entries hold 1 to 3 words, stored in normalized form.
inline constexpr size_t kMaxEntryWords = 3;

struct GazetteerEntry {
  std::string surface;             // as written, whitespace-normalized
  std::vector<std::string> words;  // normalized word forms
  Category category;
  std::string source;              // "file:line"
};

struct GazetteerMatch {
  const GazetteerEntry* entry;
  size_t length;
};

// A problem found while reading gazetteer files.
struct Diagnostic {
  ErrorCode code;
  std::string source;  // "file:line"
  std::string message;

  std::string ToString() const;
};

using CategoryCounts = std::array<size_t, kNumCategories>;

class Gazetteer {
 public:
  // Accumulates entries; rejects malformed surfaces and duplicate
  // (surface, category) pairs.
  class Builder {
   public:
    explicit Builder(SpecialSet specials = SpecialSet())
        : specials_(std::move(specials)) {}

    std::optional<Diagnostic> Add(std::string_view surface, Category category,
                                  std::string source);
    // Parses one TSV line. Blank lines and `#` comments are accepted and
    // ignored.
    std::optional<Diagnostic> AddLine(std::string_view line,
                                      const std::string& source);
    Gazetteer Build() &&;

   private:
    SpecialSet specials_;
    std::vector<GazetteerEntry> entries_;
    std::unordered_map<std::string, std::string> seen_;  // key -> source
  };

  Gazetteer() = default;

  // Loads UTF-8 TSV files of `surface<TAB>Category` lines. Throws Error on
  // the first bad line, naming file and line number.
  static Gazetteer Load(const std::vector<std::filesystem::path>& sources,
                        const SpecialSet& specials = SpecialSet());

  // Like Load but reports every bad line instead of stopping.
  static std::vector<Diagnostic> Validate(
      const std::vector<std::filesystem::path>& sources,
      const SpecialSet& specials = SpecialSet());

  // Longest entry (3, 2, then 1 words) in `categories` whose words equal the
  // norms of tokens[i..i+k). Only tokens[i..i+3) are ever read. When several
  // categories share the winning surface the lowest-numbered one is returned.
  std::optional<GazetteerMatch> LookupLongest(std::span<const Token> tokens,
                                              size_t i,
                                              CategorySet categories) const;

  // Single-word membership test on a normalized form.
  bool Contains(std::string_view norm, Category category) const;
  bool Contains(std::string_view norm, CategorySet categories) const;

  std::vector<const GazetteerEntry*> EntriesIn(Category category) const;
  const std::vector<GazetteerEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  CategoryCounts Stats() const;

 private:
  struct StringHash {
    using is_transparent = void;
    size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>()(s);
    }
  };

  explicit Gazetteer(std::vector<GazetteerEntry> entries);

  std::vector<GazetteerEntry> entries_;
  // First word -> entry ids, longest first, then by category.
  std::unordered_map<std::string, std::vector<size_t>, StringHash,
                     std::equal_to<>>
      by_first_word_;
};

}  // namespace sner

#endif  // SNER_GAZETTEER_H_
