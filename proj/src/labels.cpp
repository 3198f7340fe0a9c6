#include "cdt/labels.hpp"

#include <cctype>

#include "cdt/error.hpp"

namespace cdt {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

char digit_char(int v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + v - 10); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

int evaluate_index(std::string_view expr, std::optional<int> x, int base) {
  expr = trim(expr);
  while (expr.size() >= 2 && ((expr.front() == '(' && expr.back() == ')') || (expr.front() == '{' && expr.back() == '}')))
    expr = trim(expr.substr(1, expr.size() - 2));
  if (expr.empty()) throw InvalidInput("empty index expression");
  int total = 0;
  int sign = 1;
  std::size_t i = 0;
  bool expect_term = true;
  while (i < expr.size()) {
    const char c = expr[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!expect_term && (c == '+' || c == '-')) {
      sign = c == '+' ? 1 : -1;
      expect_term = true;
      ++i;
      continue;
    }
    if (!expect_term) throw InvalidInput("malformed index expression '" + std::string(expr) + "'");
    if (c == 'x') {
      if (!x) throw InvalidInput("index expression uses x outside an orbit");
      total += sign * *x;
      ++i;
    } else {
      int value = 0;
      std::size_t start = i;
      while (i < expr.size() && digit_value(expr[i]) >= 0 && expr[i] != 'x') {
        const int d = digit_value(expr[i]);
        if (d >= base) throw InvalidInput("digit out of base in '" + std::string(expr) + "'");
        value = value * base + d;
        ++i;
      }
      if (i == start) throw InvalidInput("malformed index expression '" + std::string(expr) + "'");
      total += sign * value;
    }
    expect_term = false;
  }
  if (expect_term) throw InvalidInput("dangling operator in '" + std::string(expr) + "'");
  return total;
}

LabeledVertexScheme LabeledVertexScheme::digits(int count) {
  if (count < 1 || count > 36) throw InvalidInput("digit scheme supports 1..36 vertices");
  LabeledVertexScheme s;
  s.kind_ = Kind::digits;
  s.count_ = count;
  return s;
}

LabeledVertexScheme LabeledVertexScheme::letters(std::string letters, int modulus) {
  if (letters.empty() || modulus < 1) throw InvalidInput("letter scheme needs letters and a modulus");
  LabeledVertexScheme s;
  s.kind_ = Kind::letters;
  s.letters_ = std::move(letters);
  s.modulus_ = modulus;
  s.count_ = static_cast<int>(s.letters_.size()) * modulus;
  return s;
}

LabeledVertexScheme LabeledVertexScheme::blocks(int blocks, int width, int block_base) {
  if (blocks < 1 || width < 1 || width > 10) throw InvalidInput("block scheme needs blocks >= 1, 1 <= width <= 10");
  LabeledVertexScheme s;
  s.kind_ = Kind::blocks;
  s.modulus_ = blocks;
  s.width_ = width;
  s.base_ = block_base;
  s.count_ = blocks * width;
  return s;
}

LabeledVertexScheme LabeledVertexScheme::integers(int count) {
  LabeledVertexScheme s;
  s.kind_ = Kind::integers;
  s.count_ = count;
  return s;
}

int LabeledVertexScheme::size() const { return count_; }

std::string LabeledVertexScheme::name(Vertex v) const {
  if (v < 0 || v >= count_) throw InvalidInput("vertex " + std::to_string(v) + " outside the scheme");
  switch (kind_) {
    case Kind::digits:
      return std::string(1, digit_char(v));
    case Kind::letters:
      return std::string(1, letters_[static_cast<std::size_t>(v / modulus_)]) + "_" + std::to_string(v % modulus_);
    case Kind::blocks: {
      const int block = v / width_;
      std::string head;
      if (base_ == 10 || block < 10)
        head = std::to_string(block);
      else
        head = std::string(1, digit_char(block));
      return head + "_" + std::to_string(v % width_);
    }
    case Kind::integers:
      return std::to_string(v);
  }
  return {};
}

std::vector<std::string> LabeledVertexScheme::names() const {
  std::vector<std::string> out;
  for (Vertex v = 0; v < count_; ++v) out.push_back(name(v));
  return out;
}

Vertex LabeledVertexScheme::parse(std::string_view token, std::optional<int> x, int shift) const {
  token = trim(token);
  if (token.empty()) throw InvalidInput("empty vertex token");
  switch (kind_) {
    case Kind::digits: {
      if (token.size() != 1 || digit_value(token[0]) < 0)
        throw InvalidInput("bad digit vertex '" + std::string(token) + "'");
      return mod(digit_value(token[0]) + shift, count_);
    }
    case Kind::integers: {
      const int v = evaluate_index(token, x);
      if (v < 0 || v >= count_) throw InvalidInput("vertex '" + std::string(token) + "' out of range");
      return v;
    }
    case Kind::letters:
    case Kind::blocks:
      break;
  }
  // Split head_sub at the underscore that is not inside brackets.
  int depth = 0;
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 0; i < token.size(); ++i) {
    const char c = token[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == '_' && depth == 0) {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos || split == 0 || split + 1 >= token.size())
    throw InvalidInput("vertex token '" + std::string(token) + "' lacks a subscript");
  const auto head = token.substr(0, split);
  const auto sub = token.substr(split + 1);
  if (kind_ == Kind::letters) {
    const auto rank = letters_.find(head);
    if (head.size() != 1 || rank == std::string::npos)
      throw InvalidInput("unknown vertex family '" + std::string(head) + "'");
    return static_cast<Vertex>(rank) * modulus_ + mod(evaluate_index(sub, x), modulus_);
  }
  const int block = mod(evaluate_index(head, x, base_) + shift, modulus_);
  const int pos = evaluate_index(sub, x);
  if (pos < 0 || pos >= width_) throw InvalidInput("block position out of range in '" + std::string(token) + "'");
  return block * width_ + pos;
}

std::vector<Vertex> LabeledVertexScheme::parse_sequence(std::string_view text, std::optional<int> x, int shift) const {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw InvalidInput("vertex sequence must be parenthesised: '" + std::string(text) + "'");
  const auto body = text.substr(1, text.size() - 2);
  std::vector<Vertex> out;
  if (kind_ == Kind::digits) {
    for (char c : body) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
      out.push_back(parse(std::string_view(&c, 1), x, shift));
    }
    return out;
  }
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ',')) ++i;
    if (i >= body.size()) break;
    std::size_t j = i;
    int depth = 0;
    while (j < body.size() && (depth > 0 || !(std::isspace(static_cast<unsigned char>(body[j])) || body[j] == ','))) {
      if (body[j] == '(' || body[j] == '{') ++depth;
      if (body[j] == ')' || body[j] == '}') --depth;
      ++j;
    }
    out.push_back(parse(body.substr(i, j - i), x, shift));
    i = j;
  }
  return out;
}

}  // namespace cdt
