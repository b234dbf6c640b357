#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trope {

std::string to_lower_ascii(std::string_view s);

bool is_word_char(char c);

struct Token {
  std::string text;   // lowercased
  size_t begin = 0;   // byte offset in the original string
  size_t end = 0;
};

// Splits on non-alphanumeric boundaries; apostrophes inside a word are kept
// ("don't" stays one token, normalized to "dont").
std::vector<Token> tokenize(std::string_view text);

std::vector<std::string> token_strings(std::string_view text);

// Light suffix stripper used by the builtin lexical models so that
// "loving"/"loves"/"loved" share a vocabulary entry. Not a linguistic
// stemmer; it only needs to be stable.
std::string stem(std::string_view word);

// Collapses runs of whitespace and trims the ends.
std::string clean_whitespace(std::string_view s);

// Sentence split on ./!/? followed by whitespace-or-end. Offsets index into
// the original text.
struct SentenceSpan {
  size_t begin = 0;
  size_t end = 0;
};
std::vector<SentenceSpan> split_sentences(std::string_view text);

bool starts_with_ci(std::string_view s, std::string_view prefix);

}  // namespace trope
