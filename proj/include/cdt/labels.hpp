#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdt/graph.hpp"

namespace cdt {

/// Bijection between textual vertex names and integer indices.
///
/// Three naming families are supported:
///  - digits:  one character per vertex, read in base 36 and reduced modulo
///             the vertex count ("a" = 10, ..., "h" = 17);
///  - letters: `u_3`, `z_{x+1}`: vertex = letter_rank * modulus + (sub mod modulus);
///  - blocks:  `4_5`, `(x+2)_0`: vertex = (block mod blocks) * width + sub.
/// Subscript and block expressions may mention the orbit variable `x`.
class LabeledVertexScheme {
 public:
  enum class Kind { digits, letters, blocks, integers };

  static LabeledVertexScheme digits(int count);
  static LabeledVertexScheme letters(std::string letters, int modulus);
  static LabeledVertexScheme blocks(int blocks, int width, int block_base = 10);
  static LabeledVertexScheme integers(int count);

  Kind kind() const { return kind_; }
  int size() const;
  std::string name(Vertex v) const;
  std::vector<std::string> names() const;

  /// Parses one vertex token. `x` binds the orbit variable; `shift` is added
  /// to the digit value (digits) or block number (blocks).
  Vertex parse(std::string_view token, std::optional<int> x = std::nullopt, int shift = 0) const;

  /// Parses a parenthesised vertex sequence such as "(123)" or
  /// "(u_1 u_2 z_3)".
  std::vector<Vertex> parse_sequence(std::string_view text, std::optional<int> x = std::nullopt,
                                     int shift = 0) const;

 private:
  Kind kind_ = Kind::integers;
  int count_ = 0;
  int modulus_ = 0;
  int width_ = 0;
  int base_ = 10;
  std::string letters_;
};

/// Evaluates "x", "x+2", "(x-1)", "{x+4}", "7", "b" (in the given base).
int evaluate_index(std::string_view expr, std::optional<int> x, int base = 10);

}  // namespace cdt
