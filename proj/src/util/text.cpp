#include "trope/util/text.hpp"

#include <cctype>

namespace trope {

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (!is_word_char(text[i])) {
      ++i;
      continue;
    }
    size_t begin = i;
    std::string word;
    while (i < n) {
      char c = text[i];
      if (is_word_char(c)) {
        word.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                            : c);
        ++i;
      } else if ((c == '\'' || c == '\xe2') && i + 1 < n) {
        // ASCII apostrophe, or the first byte of a UTF-8 right single quote.
        size_t skip = 1;
        if (c == '\xe2') {
          if (i + 2 < n && text[i + 1] == '\x80' && text[i + 2] == '\x99') {
            skip = 3;
          } else {
            break;
          }
        }
        if (i + skip < n && is_word_char(text[i + skip])) {
          i += skip;  // drop the apostrophe, keep the word together
        } else {
          break;
        }
      } else {
        break;
      }
    }
    tokens.push_back(Token{std::move(word), begin, i});
  }
  return tokens;
}

std::vector<std::string> token_strings(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize(text)) out.push_back(std::move(t.text));
  return out;
}

std::string stem(std::string_view word) {
  std::string w(word);
  auto ends = [&](std::string_view suf) {
    return w.size() > suf.size() &&
           w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
  };
  auto chop = [&](size_t k) { w.resize(w.size() - k); };
  if (w.size() <= 3) return w;
  if (ends("ies") && w.size() > 4) {
    chop(3);
    w.push_back('y');
  } else if (ends("ing") && w.size() > 5) {
    chop(3);
    if (w.size() > 2 && w[w.size() - 1] == w[w.size() - 2]) chop(1);
  } else if (ends("ed") && w.size() > 4) {
    chop(2);
    if (w.size() > 2 && w[w.size() - 1] == w[w.size() - 2]) chop(1);
  } else if (ends("es") && w.size() > 4) {
    chop(2);
  } else if (ends("s") && !ends("ss") && !ends("us")) {
    chop(1);
  }
  if (ends("ly") && w.size() > 4) chop(2);
  return w;
}

std::string clean_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = true;  // trims leading space
  for (char c : s) {
    bool ws = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (ws) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<SentenceSpan> split_sentences(std::string_view text) {
  std::vector<SentenceSpan> spans;
  size_t begin = 0;
  const size_t n = text.size();
  for (size_t i = 0; i < n; ++i) {
    char c = text[i];
    if (c == '.' || c == '!' || c == '?') {
      size_t j = i + 1;
      while (j < n && (text[j] == '.' || text[j] == '!' || text[j] == '?' ||
                       text[j] == '"' || text[j] == '\''))
        ++j;
      if (j >= n || std::isspace(static_cast<unsigned char>(text[j]))) {
        spans.push_back(SentenceSpan{begin, j});
        while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        begin = j;
        i = j == 0 ? 0 : j - 1;
      }
    }
  }
  if (begin < n) {
    // Trailing sentence without terminal punctuation.
    size_t end = n;
    bool has_content = false;
    for (size_t k = begin; k < end; ++k) {
      if (!std::isspace(static_cast<unsigned char>(text[k]))) {
        has_content = true;
        break;
      }
    }
    if (has_content) spans.push_back(SentenceSpan{begin, end});
  }
  return spans;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    char a = s[i], b = prefix[i];
    if (a >= 'A' && a <= 'Z') a = static_cast<char>(a - 'A' + 'a');
    if (b >= 'A' && b <= 'Z') b = static_cast<char>(b - 'A' + 'a');
    if (a != b) return false;
  }
  return true;
}

}  // namespace trope
