#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "walkclass/rational.hpp"

namespace walkclass {

// Normalized step weights d(i,j), i,j in {-1,0,1}, summing to 1.
class WeightTable {
 public:
  using Raw = std::array<Rational, 9>;

  // Validates and rescales raw nonnegative weights so that they sum to 1.
  static WeightTable from_raw(const Raw& raw);

  const Rational& d(int i, int j) const { return d_[index(i, j)]; }
  const Raw& entries() const { return d_; }
  bool has(int i, int j) const { return sgn(d(i, j)) != 0; }

  static constexpr std::size_t index(int i, int j) {
    return static_cast<std::size_t>((i + 1) * 3 + (j + 1));
  }

  friend bool operator==(const WeightTable& a, const WeightTable& b) { return a.d_ == b.d_; }

 private:
  Raw d_{};
};

enum class DegenerateCase { DiagonalOrAntidiagonal, HalfSpaceX, HalfSpaceY };

struct PatternClass {
  enum class Tag { NonSingular, Degenerate, GenusZeroConfig };
  Tag tag = Tag::NonSingular;
  DegenerateCase degenerate_case = DegenerateCase::DiagonalOrAntidiagonal;
  // For GenusZeroConfig: index (0..7) of the first direction of a zero window of three
  // consecutive directions in the cyclic order of kDirections.
  int zero_window = -1;
};

// Cyclic order E, NE, N, NW, W, SW, S, SE.
inline constexpr std::array<std::pair<int, int>, 8> kDirections = {
    {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};

std::string direction_name(int index);

WeightTable parse_model(std::string_view json_text);
WeightTable load_model(const std::string& path);
std::string canonical_json(const WeightTable& w);

PatternClass pattern_class(const WeightTable& w);
std::string pattern_name(const PatternClass& p);

std::pair<Rational, Rational> drift(const WeightTable& w);

// Named models used by tests, examples and the CLI.
namespace models {
WeightTable simple_walk();
WeightTable kreweras();
WeightTable gessel();
WeightTable nw_heavy();
WeightTable fixed_point_model();
WeightTable one_sided_model();
WeightTable order10(int which);  // which = 1, 2, 3
WeightTable poles_example();
WeightTable from_list(std::initializer_list<std::tuple<int, int, const char*>> entries);
}  // namespace models

}  // namespace walkclass
