#pragma once

// Textual code-spec files. A spec file carries everything needed to rebuild
// a code bit-identically: field descriptor, scroll exponents, fiber points,
// and the fiber bases (as a mode + seed, or explicitly). Parsing is lenient
// about blank lines and '#' comments; serialization is canonical, and
// parse -> serialize is the identity on canonical text.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sags/code.hpp"

namespace sags {

struct CodeSpec {
  Field field;
  std::vector<int> exponents;
  std::vector<Fel> points;
  enum class Bases { identity, random, explicit_list } bases = Bases::identity;
  uint64_t seed = 0;                   // random mode only
  std::vector<Matrix> basis_matrices;  // explicit mode only
};

inline std::string serialize_code_spec(const CodeSpec& spec) {
  std::ostringstream os;
  os << "sags v1\n";
  os << "field " << spec.field.descriptor() << '\n';
  os << "exponents ";
  for (size_t i = 0; i < spec.exponents.size(); ++i) {
    if (i) os << ',';
    os << spec.exponents[i];
  }
  os << '\n' << "points ";
  for (size_t i = 0; i < spec.points.size(); ++i) {
    if (i) os << ',';
    os << spec.field.format(spec.points[i]);
  }
  os << '\n';
  switch (spec.bases) {
    case CodeSpec::Bases::identity:
      os << "bases identity\n";
      break;
    case CodeSpec::Bases::random:
      os << "bases random " << spec.seed << '\n';
      break;
    case CodeSpec::Bases::explicit_list:
      os << "bases explicit\n";
      for (const Matrix& b : spec.basis_matrices) {
        os << "basis";
        for (size_t i = 0; i < b.rows(); ++i)
          for (size_t j = 0; j < b.cols(); ++j) os << ' ' << spec.field.format(b.at(i, j));
        os << '\n';
      }
      break;
  }
  return os.str();
}

inline CodeSpec parse_code_spec(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<std::pair<std::string, std::string>> entries;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    auto space = line.find(' ');
    if (space == std::string::npos)
      entries.emplace_back(line, "");
    else
      entries.emplace_back(line.substr(0, space), line.substr(space + 1));
  }
  if (entries.empty() || entries[0].first != "sags" || entries[0].second != "v1")
    throw parse_error("code spec must start with 'sags v1'");

  auto find_one = [&](const std::string& key) -> const std::string& {
    const std::string* found = nullptr;
    for (auto& [k, v] : entries)
      if (k == key) {
        if (found) throw parse_error("duplicate '" + key + "' line");
        found = &v;
      }
    if (!found) throw parse_error("missing '" + key + "' line");
    return *found;
  };

  Field field = Field::parse(find_one("field"));
  CodeSpec spec{field, {}, {}, CodeSpec::Bases::identity, 0, {}};

  {
    std::string list = find_one("exponents");
    std::istringstream ls(list);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      if (tok.empty()) throw parse_error("empty exponent");
      spec.exponents.push_back(std::stoi(tok));
    }
    if (spec.exponents.empty()) throw parse_error("no exponents given");
  }
  {
    std::string list = find_one("points");
    std::istringstream ls(list);
    std::string tok;
    while (std::getline(ls, tok, ','))
      spec.points.push_back(field.parse_element(tok));
    if (spec.points.empty()) throw parse_error("no points given");
  }
  {
    std::istringstream bs(find_one("bases"));
    std::string mode;
    bs >> mode;
    if (mode == "identity") {
      spec.bases = CodeSpec::Bases::identity;
    } else if (mode == "random") {
      spec.bases = CodeSpec::Bases::random;
      if (!(bs >> spec.seed)) throw parse_error("'bases random' needs a seed");
    } else if (mode == "explicit") {
      spec.bases = CodeSpec::Bases::explicit_list;
      const size_t r = spec.exponents.size();
      for (auto& [k, v] : entries) {
        if (k != "basis") continue;
        std::istringstream ms(v);
        Matrix b(field, r, r);
        std::string tok;
        for (size_t i = 0; i < r; ++i)
          for (size_t j = 0; j < r; ++j) {
            if (!(ms >> tok)) throw parse_error("basis line needs r*r entries");
            b.at(i, j) = field.parse_element(tok);
          }
        if (ms >> tok) throw parse_error("trailing data on basis line");
        spec.basis_matrices.push_back(std::move(b));
      }
      if (spec.basis_matrices.size() != spec.points.size())
        throw parse_error("explicit bases require one basis line per point");
    } else {
      throw parse_error("unknown bases mode: " + mode);
    }
  }
  return spec;
}

inline EvaluationSet evaluation_set_of(const CodeSpec& spec) {
  ScrollSpec scroll(spec.field, spec.exponents);
  switch (spec.bases) {
    case CodeSpec::Bases::identity:
      return standard_fiber_bases(scroll, spec.points, BasisMode::identity);
    case CodeSpec::Bases::random:
      return standard_fiber_bases(scroll, spec.points, BasisMode::random, spec.seed);
    case CodeSpec::Bases::explicit_list:
      return EvaluationSet(spec.field, spec.points, spec.basis_matrices);
  }
  throw std::logic_error("unreachable");
}

inline SagsCode build_from_spec(const CodeSpec& spec) {
  ScrollSpec scroll(spec.field, spec.exponents);
  return build_code(scroll, evaluation_set_of(spec));
}

// One-line word format: comma-separated canonical element indices.
inline std::string word_to_text(const Field& f, const std::vector<Fel>& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ',';
    os << f.format(word[i]);
  }
  return os.str();
}

inline std::vector<Fel> word_from_text(const Field& f, std::string_view text) {
  std::vector<Fel> out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) throw parse_error("empty word entry");
    size_t e = tok.find_last_not_of(" \t\r\n");
    out.push_back(f.parse_element(tok.substr(b, e - b + 1)));
  }
  if (out.empty()) throw parse_error("empty word");
  return out;
}

}  // namespace sags
