#pragma once

// Small string helpers shared by the sequence, norm and function grammars.

#include <cctype>
#include <charconv>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "blaschke/errors.hpp"

namespace blaschke::parse {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw PreconditionError("cannot parse real number '" + std::string(text) + "'");
  }
  return value;
}

inline long parse_integer(std::string_view text) {
  text = trim(text);
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw PreconditionError("cannot parse integer '" + std::string(text) + "'");
  }
  return value;
}

/// Accepts "0.3", "-0.4i", "0.3+0.2i", "0.1-i", "i", "1e-3-2e-2i".
inline std::complex<double> parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw PreconditionError("empty complex literal");
  if (text.back() != 'i' && text.back() != 'j') return {parse_real(text), 0.0};
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  double im = 0;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_real(im_part);
  }
  return {re_part.empty() ? 0.0 : parse_real(re_part), im};
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace blaschke::parse
