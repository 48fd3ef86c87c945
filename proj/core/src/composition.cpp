#include "treedegree/composition.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace treedegree {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part < 0) {
      throw std::invalid_argument("composition parts must be nonnegative");
    }
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

std::int64_t Composition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Composition Composition::slice(std::size_t first, std::size_t count) const {
  if (first > parts_.size() || count > parts_.size() - first) {
    throw std::out_of_range("Composition::slice out of range");
  }
  auto begin = parts_.begin() + static_cast<std::ptrdiff_t>(first);
  return Composition(std::vector<int>(begin, begin + static_cast<std::ptrdiff_t>(count)));
}

Composition operator+(const Composition& lhs, const Composition& rhs) {
  std::vector<int> joined;
  joined.reserve(lhs.size() + rhs.size());
  joined.insert(joined.end(), lhs.parts_.begin(), lhs.parts_.end());
  joined.insert(joined.end(), rhs.parts_.begin(), rhs.parts_.end());
  Composition result;
  result.parts_ = std::move(joined);
  return result;
}

namespace {

[[noreturn]] void bad_text(std::string_view text, const char* why) {
  throw std::invalid_argument("malformed composition '" + std::string(text) + "': " + why);
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
}

}  // namespace

Composition Composition::parse(std::string_view text) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != '(') {
    bad_text(text, "expected '('");
  }
  ++pos;
  std::vector<int> parts;
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
  } else {
    while (true) {
      skip_space(text, pos);
      int value = 0;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr == first) {
        bad_text(text, "expected a nonnegative integer");
      }
      if (value < 0) {
        bad_text(text, "negative part");
      }
      parts.push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      bad_text(text, "expected ',' or ')'");
    }
  }
  skip_space(text, pos);
  if (pos != text.size()) {
    bad_text(text, "trailing characters");
  }
  return Composition(std::move(parts));
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j != 0) {
      out += ',';
    }
    out += std::to_string(parts_[j]);
  }
  out += ')';
  return out;
}

std::int64_t f_statistic(const Composition& c) {
  return c.sum() - static_cast<std::int64_t>(c.size());
}

bool is_unit(const Composition& c) {
  if (c.empty()) {
    return false;
  }
  std::int64_t height = 0;
  for (std::size_t j = 0; j + 1 < c.size(); ++j) {
    height += c[j] - 1;
    if (height < 0) {
      return false;
    }
  }
  return height + c[c.size() - 1] - 1 == -1;
}

bool is_positive(const Composition& c) {
  std::int64_t height = 0;
  for (int part : c) {
    height += part - 1;
    if (height < 0) {
      return false;
    }
  }
  return true;
}

Composition FundamentalDecomposition::flatten() const {
  Composition result;
  for (const auto& unit : units) {
    result = result + unit;
  }
  return result + tail;
}

FundamentalDecomposition fundamental_decomposition(const Composition& c) {
  FundamentalDecomposition result;
  std::size_t start = 0;
  std::int64_t height = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    height += c[j] - 1;
    if (height == -1) {
      result.units.push_back(c.slice(start, j + 1 - start));
      start = j + 1;
      height = 0;
    }
  }
  result.tail = c.slice(start, c.size() - start);
  return result;
}

}  // namespace treedegree
