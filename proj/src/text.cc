#include "sner/text.h"

#include <algorithm>

namespace sner {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Non-ASCII punctuation and symbol blocks that never form part of a word.
bool IsNonAsciiPunct(char32_t cp) {
  if (cp >= 0xA1 && cp <= 0xBF) return true;
  if (cp == 0xD7 || cp == 0xF7) return true;
  if (cp >= 0x2010 && cp <= 0x205E) return true;
  if (cp == 0x060C || cp == 0x061B || cp == 0x061E || cp == 0x061F) return true;
  if (cp >= 0x066A && cp <= 0x066D) return true;
  if (cp == 0x06D4) return true;
  if (cp >= 0x3000 && cp <= 0x303F) return true;
  if (cp >= 0xFF01 && cp <= 0xFF0F) return true;
  if (cp == kReplacement) return true;
  return false;
}

TokenKind ClassifyCore(std::string_view core) {
  if (IsNumberLiteral(core)) return TokenKind::kNumber;
  for (size_t pos = 0; pos < core.size();) {
    DecodedChar c = DecodeUtf8(core, pos);
    if (IsWordChar(c.cp) || IsDigitChar(c.cp)) return TokenKind::kWord;
    pos += c.length;
  }
  return TokenKind::kSymbol;
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kNumber: return "number";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kSymbol: return "symbol";
  }
  return "word";
}

DecodedChar DecodeUtf8(std::string_view text, size_t pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) return {lead, 1};

  size_t length;
  char32_t cp;
  char32_t min;
  if ((lead & 0xE0) == 0xC0) {
    length = 2, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4, cp = lead & 0x07, min = 0x10000;
  } else {
    return {kReplacement, 1};
  }
  if (pos + length > text.size()) return {kReplacement, 1};
  for (size_t k = 1; k < length; ++k) {
    const auto c = static_cast<unsigned char>(text[pos + k]);
    if (!IsContinuation(c)) return {kReplacement, 1};
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {kReplacement, 1};
  }
  return {cp, length};
}

std::string EncodeUtf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

bool IsValidUtf8(std::string_view text) {
  for (size_t pos = 0; pos < text.size();) {
    DecodedChar c = DecodeUtf8(text, pos);
    if (c.cp == kReplacement) {
      // A literal U+FFFD is valid; a decoding failure always has length 1.
      if (c.length == 1) return false;
    }
    pos += c.length;
  }
  return true;
}

size_t CodePointCount(std::string_view text) {
  size_t n = 0;
  for (size_t pos = 0; pos < text.size(); ++n) pos += DecodeUtf8(text, pos).length;
  return n;
}

std::vector<char32_t> ToCodePoints(std::string_view text) {
  std::vector<char32_t> out;
  for (size_t pos = 0; pos < text.size();) {
    DecodedChar c = DecodeUtf8(text, pos);
    out.push_back(c.cp);
    pos += c.length;
  }
  return out;
}

bool IsUnicodeWhitespace(char32_t cp) {
  return (cp >= 0x09 && cp <= 0x0D) || cp == 0x20 || cp == 0x85 ||
         cp == 0xA0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) ||
         cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F ||
         cp == 0x3000;
}

bool IsDigitChar(char32_t cp) { return DigitValue(cp) >= 0; }

int DigitValue(char32_t cp) {
  if (cp >= U'0' && cp <= U'9') return static_cast<int>(cp - U'0');
  if (cp >= 0x0660 && cp <= 0x0669) return static_cast<int>(cp - 0x0660);
  if (cp >= 0x06F0 && cp <= 0x06F9) return static_cast<int>(cp - 0x06F0);
  return -1;
}

bool IsWordChar(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
           (cp >= U'0' && cp <= U'9');
  }
  // ZWNJ and ZWJ sit below the general punctuation block and count as word
  // characters.
  return !IsUnicodeWhitespace(cp) && !IsNonAsciiPunct(cp) &&
         !IsDigitChar(cp);
}

SpecialSet::SpecialSet()
    : SpecialSet({U'،', U'۔', U'.', U',', U';', U':', U'!', U'?', U'"',
                  U'\'', U'(', U')', U'[', U']', U'{', U'}', U'٬', U'؟'}) {}

SpecialSet::SpecialSet(std::vector<char32_t> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

SpecialSet SpecialSet::Parse(std::string_view spec) {
  std::vector<char32_t> members;
  for (char32_t cp : ToCodePoints(spec)) {
    if (!IsUnicodeWhitespace(cp)) members.push_back(cp);
  }
  return SpecialSet(std::move(members));
}

bool SpecialSet::contains(char32_t cp) const {
  return std::binary_search(members_.begin(), members_.end(), cp);
}

std::string NormalizeWhitespace(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (size_t pos = 0; pos < raw.size();) {
    DecodedChar c = DecodeUtf8(raw, pos);
    if (IsUnicodeWhitespace(c.cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out.append(raw.substr(pos, c.length));
    }
    pos += c.length;
  }
  return out;
}

StripResult StripEdgeSpecials(std::string_view surface,
                              const SpecialSet& specials) {
  StripResult result;
  size_t begin = 0;
  while (begin < surface.size()) {
    DecodedChar c = DecodeUtf8(surface, begin);
    if (!specials.contains(c.cp)) break;
    result.stripped.push_back(
        {std::string(surface.substr(begin, c.length)), Side::kStart});
    begin += c.length;
  }

  // Walk the remainder forward, remembering where the trailing run of
  // specials starts.
  size_t end = surface.size();
  std::vector<StrippedChar> tail;
  for (size_t pos = begin; pos < surface.size();) {
    DecodedChar c = DecodeUtf8(surface, pos);
    if (specials.contains(c.cp)) {
      if (tail.empty()) end = pos;
      tail.push_back({std::string(surface.substr(pos, c.length)), Side::kEnd});
    } else {
      tail.clear();
      end = surface.size();
    }
    pos += c.length;
  }
  result.core = std::string(surface.substr(begin, end - begin));
  result.stripped.insert(result.stripped.end(), tail.begin(), tail.end());
  return result;
}

std::string FoldCase(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool IsNumberLiteral(std::string_view s) {
  if (s.empty()) return false;
  bool prev_digit = false;
  for (size_t pos = 0; pos < s.size();) {
    DecodedChar c = DecodeUtf8(s, pos);
    if (IsDigitChar(c.cp)) {
      prev_digit = true;
    } else if (c.cp == U'.' || c.cp == U'/' || c.cp == U':' || c.cp == U'-') {
      if (!prev_digit) return false;
      prev_digit = false;
    } else {
      return false;
    }
    pos += c.length;
  }
  return prev_digit;
}

TokenStream Tokenize(std::string_view raw, const TextOptions& options) {
  TokenStream stream;
  stream.source = std::string(raw);

  auto emit = [&](size_t begin, size_t end, TokenKind kind) {
    Token token;
    token.surface = std::string(raw.substr(begin, end - begin));
    token.span = {begin, end};
    token.kind = kind;
    if (kind != TokenKind::kPunctuation) {
      token.norm = FoldCase(token.surface);
      auto it = options.synonyms.find(token.norm);
      if (it != options.synonyms.end()) token.norm = it->second;
    }
    stream.tokens.push_back(std::move(token));
  };

  auto emit_chunk = [&](size_t begin, size_t end) {
    std::string_view chunk = raw.substr(begin, end - begin);
    StripResult strip = StripEdgeSpecials(chunk, options.specials);
    size_t pos = begin;
    size_t core_begin = begin;
    for (const StrippedChar& s : strip.stripped) {
      if (s.side != Side::kStart) break;
      emit(pos, pos + s.ch.size(), TokenKind::kPunctuation);
      pos += s.ch.size();
      core_begin = pos;
    }
    if (!strip.core.empty()) {
      emit(core_begin, core_begin + strip.core.size(),
           ClassifyCore(strip.core));
      pos = core_begin + strip.core.size();
    }
    for (const StrippedChar& s : strip.stripped) {
      if (s.side != Side::kEnd) continue;
      emit(pos, pos + s.ch.size(), TokenKind::kPunctuation);
      pos += s.ch.size();
    }
  };

  size_t chunk_begin = 0;
  bool in_chunk = false;
  for (size_t pos = 0; pos < raw.size();) {
    DecodedChar c = DecodeUtf8(raw, pos);
    const bool space = IsUnicodeWhitespace(c.cp);
    if (space && in_chunk) {
      emit_chunk(chunk_begin, pos);
      in_chunk = false;
    } else if (!space && !in_chunk) {
      chunk_begin = pos;
      in_chunk = true;
    }
    pos += c.length;
  }
  if (in_chunk) emit_chunk(chunk_begin, raw.size());
  return stream;
}

}  // namespace sner
