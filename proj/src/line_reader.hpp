#pragma once

#include "nisub/error.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace nisub::detail {

/// Reads whitespace-separated records, skipping blank lines and '#' comments.
/// A token may be double-quoted to carry spaces.
struct LineReader {
  std::istream& in;
  size_t line = 0;

  bool next(std::vector<std::string>& words) {
    std::string text;
    while (std::getline(in, text)) {
      ++line;
      words = split(text);
      if (words.empty() || words[0][0] == '#') continue;
      return true;
    }
    return false;
  }

  std::vector<std::string> split(const std::string& text) const {
    std::vector<std::string> out;
    size_t i = 0;
    while (true) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i == text.size()) break;
      if (text[i] == '"') {
        size_t close = text.find('"', i + 1);
        if (close == std::string::npos) throw ParseError("unterminated quoted token", line, i + 1);
        out.push_back(text.substr(i + 1, close - i - 1));
        i = close + 1;
      } else {
        size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        out.push_back(text.substr(i, end - i));
        i = end;
      }
    }
    return out;
  }
};

/// Token as written by the text formats: quoted when it contains whitespace.
inline std::string quote_token(const std::string& s) {
  bool plain = !s.empty() && s.find_first_of(" \t\"") == std::string::npos;
  return plain ? s : "\"" + s + "\"";
}

inline std::string join_from(const std::vector<std::string>& words, size_t from) {
  std::string out;
  for (size_t i = from; i < words.size(); ++i) out += (i > from ? " " : "") + words[i];
  return out;
}

}  // namespace nisub::detail
