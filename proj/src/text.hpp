// Small string helpers shared by the parsers.

#ifndef PSG_SRC_TEXT_HPP_
#define PSG_SRC_TEXT_HPP_

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace psg::detail {

  inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  }

  // Splits on '\n'; a trailing newline does not produce a final empty line.
  inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t                   start = 0;
    while (start < text.size()) {
      auto nl = text.find('\n', start);
      if (nl == std::string_view::npos) {
        out.push_back(text.substr(start));
        break;
      }
      auto line = text.substr(start, nl - start);
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      out.push_back(line);
      start = nl + 1;
    }
    return out;
  }

  inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t              i = 0;
    while (i < s.size()) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
      auto j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
        ++j;
      }
      if (j > i) {
        out.emplace_back(s.substr(i, j - i));
      }
      i = j;
    }
    return out;
  }

  // ASCII alphanumeric plus '_', nonempty.
  inline bool valid_name(std::string_view s) {
    if (s.empty()) {
      return false;
    }
    for (char c : s) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        return false;
      }
    }
    return true;
  }

}  // namespace psg::detail

#endif  // PSG_SRC_TEXT_HPP_
