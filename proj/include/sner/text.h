#ifndef SNER_TEXT_H_
#define SNER_TEXT_H_

// Cleanup and tokenization of Arabic-script text. All functions here are
// pure and may be called concurrently.

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sner {

// Half-open byte range into the original input text.
struct ByteSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool operator==(const ByteSpan&) const = default;
};

enum class TokenKind { kWord, kNumber, kPunctuation, kSymbol };

std::string_view TokenKindName(TokenKind kind);

struct Token {
  std::string surface;  // exact slice of the source text
  ByteSpan span;
  std::string norm;     // empty for punctuation tokens
  TokenKind kind = TokenKind::kWord;

  bool is_word() const { return kind == TokenKind::kWord; }
  bool operator==(const Token&) const = default;
};

struct TokenStream {
  std::string source;
  std::vector<Token> tokens;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const Token& operator[](size_t i) const { return tokens[i]; }
  bool operator==(const TokenStream&) const = default;
};

// UTF-8 helpers. Invalid sequences decode as U+FFFD with length 1 so that
// every byte of the input is still accounted for.
struct DecodedChar {
  char32_t cp;
  size_t length;
};
DecodedChar DecodeUtf8(std::string_view text, size_t pos);
std::string EncodeUtf8(char32_t cp);
bool IsValidUtf8(std::string_view text);
size_t CodePointCount(std::string_view text);
std::vector<char32_t> ToCodePoints(std::string_view text);

bool IsUnicodeWhitespace(char32_t cp);
bool IsDigitChar(char32_t cp);
// Decimal value of an ASCII, Arabic-Indic or Extended Arabic-Indic digit.
int DigitValue(char32_t cp);
bool IsWordChar(char32_t cp);

// Closed set of characters stripped from token edges. Each member is a
// single code point.
class SpecialSet {
 public:
  // The default set: ، ۔ . , ; : ! ? " ' ( ) [ ] { } ٬ ؟
  SpecialSet();
  explicit SpecialSet(std::vector<char32_t> members);

  // Parses a whitespace-separated list of single characters.
  static SpecialSet Parse(std::string_view spec);

  bool contains(char32_t cp) const;
  const std::vector<char32_t>& members() const { return members_; }

 private:
  std::vector<char32_t> members_;  // sorted, unique
};

// Rewrites token norms before matching (variant -> canonical form).
using SynonymMap = std::unordered_map<std::string, std::string>;

struct TextOptions {
  SpecialSet specials;
  SynonymMap synonyms;
};

std::string NormalizeWhitespace(std::string_view raw);

enum class Side { kStart, kEnd };

struct StrippedChar {
  std::string ch;
  Side side;
  bool operator==(const StrippedChar&) const = default;
};

struct StripResult {
  std::string core;
  std::vector<StrippedChar> stripped;  // in text order
};

StripResult StripEdgeSpecials(std::string_view surface,
                              const SpecialSet& specials = SpecialSet());

// Lowercases ASCII letters; everything else passes through untouched.
std::string FoldCase(std::string_view s);

// True for digits optionally joined by single internal . / : - separators.
bool IsNumberLiteral(std::string_view s);

// Splits on whitespace runs (equivalently: tokenizes NormalizeWhitespace of
// the input) and peels edge specials into punctuation tokens. Spans always
// index `raw` itself.
TokenStream Tokenize(std::string_view raw,
                     const TextOptions& options = TextOptions());

}  // namespace sner

#endif  // SNER_TEXT_H_
