#include "walkclass/model.hpp"

#include <fstream>
#include "json.hpp"
#include <sstream>

#include "walkclass/error.hpp"

namespace walkclass {

namespace {

std::string key_for(int i, int j) { return "d" + std::to_string(i) + "," + std::to_string(j); }

}  // namespace

WeightTable WeightTable::from_raw(const Raw& input) {
  Raw raw = input;
  for (auto& v : raw) v.canonicalize();
  Rational total = 0;
  bool moving = false;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      const Rational& v = raw[index(i, j)];
      if (sgn(v) < 0)
        throw Error(ErrorCode::NegativeWeight, "negative weight " + to_string(v) + " at " + key_for(i, j));
      total += v;
      if (sgn(v) != 0 && (i != 0 || j != 0)) moving = true;
    }
  if (!moving) throw Error(ErrorCode::AllZeroWeights, "all non-stationary weights are zero");
  WeightTable w;
  for (std::size_t k = 0; k < 9; ++k) w.d_[k] = raw[k] / total;
  return w;
}

std::string direction_name(int index) {
  static const char* names[8] = {"E", "NE", "N", "NW", "W", "SW", "S", "SE"};
  return names[((index % 8) + 8) % 8];
}

WeightTable parse_model(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedModel, std::string("model is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::MalformedModel, "model must be a JSON object");
  WeightTable::Raw raw;
  for (auto& v : raw) v = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    int slot = -1;
    for (int i = -1; i <= 1 && slot < 0; ++i)
      for (int j = -1; j <= 1; ++j)
        if (it.key() == key_for(i, j)) {
          slot = static_cast<int>(WeightTable::index(i, j));
          break;
        }
    if (slot < 0) throw Error(ErrorCode::MalformedModel, "unknown key '" + it.key() + "'");
    const auto& v = it.value();
    Rational r;
    if (v.is_number_integer()) {
      r = parse_rational(v.dump());
    } else if (v.is_string()) {
      r = parse_rational(v.get<std::string>());
    } else {
      throw Error(ErrorCode::MalformedRational,
                  "weight for '" + it.key() + "' must be an integer or a \"p/q\" string");
    }
    raw[static_cast<std::size_t>(slot)] = r;
  }
  return WeightTable::from_raw(raw);
}

WeightTable load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open model file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string canonical_json(const WeightTable& w) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) doc[key_for(i, j)] = to_string(w.d(i, j));
  return doc.dump();
}

PatternClass pattern_class(const WeightTable& w) {
  PatternClass out;
  auto zero = [&](int i, int j) { return !w.has(i, j); };

  const bool only_diag = zero(-1, 1) && zero(1, -1) && zero(-1, 0) && zero(1, 0) && zero(0, -1) && zero(0, 1);
  const bool only_anti = zero(1, 1) && zero(-1, -1) && zero(-1, 0) && zero(1, 0) && zero(0, -1) && zero(0, 1);
  if (only_diag || only_anti) {
    out.tag = PatternClass::Tag::Degenerate;
    out.degenerate_case = DegenerateCase::DiagonalOrAntidiagonal;
    return out;
  }
  for (int i : {-1, 1})
    if (zero(i, -1) && zero(i, 0) && zero(i, 1)) {
      out.tag = PatternClass::Tag::Degenerate;
      out.degenerate_case = DegenerateCase::HalfSpaceX;
      return out;
    }
  for (int j : {-1, 1})
    if (zero(-1, j) && zero(0, j) && zero(1, j)) {
      out.tag = PatternClass::Tag::Degenerate;
      out.degenerate_case = DegenerateCase::HalfSpaceY;
      return out;
    }
  for (int s = 0; s < 8; ++s) {
    bool all_zero = true;
    for (int k = 0; k < 3; ++k) {
      const auto [i, j] = kDirections[static_cast<std::size_t>((s + k) % 8)];
      all_zero = all_zero && zero(i, j);
    }
    if (all_zero) {
      out.tag = PatternClass::Tag::GenusZeroConfig;
      out.zero_window = s;
      return out;
    }
  }
  return out;
}

std::string pattern_name(const PatternClass& p) {
  switch (p.tag) {
    case PatternClass::Tag::NonSingular: return "NonSingular";
    case PatternClass::Tag::Degenerate:
      switch (p.degenerate_case) {
        case DegenerateCase::DiagonalOrAntidiagonal: return "Degenerate(DiagonalOrAntidiagonal)";
        case DegenerateCase::HalfSpaceX: return "Degenerate(HalfSpaceX)";
        case DegenerateCase::HalfSpaceY: return "Degenerate(HalfSpaceY)";
      }
      break;
    case PatternClass::Tag::GenusZeroConfig:
      return "GenusZeroConfig(no " + direction_name(p.zero_window) + "," +
             direction_name(p.zero_window + 1) + "," + direction_name(p.zero_window + 2) + ")";
  }
  return "Unknown";
}

std::pair<Rational, Rational> drift(const WeightTable& w) {
  Rational dx = 0, dy = 0;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      dx += i * w.d(i, j);
      dy += j * w.d(i, j);
    }
  return {dx, dy};
}

namespace models {

WeightTable from_list(std::initializer_list<std::tuple<int, int, const char*>> entries) {
  WeightTable::Raw raw;
  for (auto& v : raw) v = 0;
  for (const auto& [i, j, v] : entries) raw[WeightTable::index(i, j)] = parse_rational(v);
  return WeightTable::from_raw(raw);
}

WeightTable simple_walk() { return from_list({{1, 0, "1/4"}, {-1, 0, "1/4"}, {0, 1, "1/4"}, {0, -1, "1/4"}}); }
WeightTable kreweras() { return from_list({{-1, 0, "1/3"}, {0, -1, "1/3"}, {1, 1, "1/3"}}); }
WeightTable gessel() { return from_list({{1, 0, "1/4"}, {1, 1, "1/4"}, {-1, 0, "1/4"}, {-1, -1, "1/4"}}); }
WeightTable nw_heavy() { return from_list({{-1, 1, "1/2"}, {-1, 0, "1/6"}, {0, -1, "1/6"}, {1, 1, "1/6"}}); }
WeightTable fixed_point_model() {
  return from_list({{-1, 0, "1/6"}, {1, 0, "1/6"}, {0, -1, "1/6"}, {-1, 1, "1/6"}, {0, 1, "1/3"}});
}
WeightTable one_sided_model() {
  return from_list({{-1, 1, "1/3"}, {1, 0, "1/6"}, {1, -1, "1/6"}, {-1, 0, "1/6"}, {0, -1, "1/6"}});
}
WeightTable order10(int which) {
  switch (which) {
    case 1:
      return from_list({{-1, 1, "1/9"}, {1, 1, "1/9"}, {1, -1, "1/9"}, {-1, 0, "1/9"}, {0, -1, "1/9"},
                        {1, 0, "2/9"}, {0, 1, "2/9"}});
    case 2:
      return from_list({{-1, 1, "1/9"}, {-1, -1, "1/9"}, {1, 0, "1/9"}, {1, -1, "1/9"}, {0, 1, "1/9"},
                        {-1, 0, "2/9"}, {0, -1, "2/9"}});
    case 3:
      return from_list({{-1, 1, "1/9"}, {1, 1, "1/9"}, {1, 0, "1/9"}, {-1, -1, "1/9"}, {0, -1, "1/9"},
                        {-1, 0, "2/9"}, {0, 1, "2/9"}});
    default:
      throw Error(ErrorCode::InvalidArgument, "order10 model index must be 1, 2 or 3");
  }
}
WeightTable poles_example() {
  return from_list({{-1, 1, "1/4"}, {1, 1, "1/4"}, {1, -1, "1/4"}, {0, -1, "1/4"}});
}

}  // namespace models

}  // namespace walkclass
