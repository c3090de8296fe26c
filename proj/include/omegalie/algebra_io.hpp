#pragma once

// Algebra files: a JSON object with "field", "dim", "omega" (n x n element
// strings) and "brackets" ("i,j" with i < j, 1-based, to length-n arrays).
// Missing bracket keys mean zero.

#include <json.hpp>

#include <string>

#include "omegalie/algebra.hpp"

namespace omegalie {

using ordered_json = nlohmann::ordered_json;

inline ordered_json algebra_to_json(const OmegaAlgebra& alg) {
  ordered_json j;
  const std::size_t n = alg.dim();
  j["field"] = alg.field()->to_string();
  j["dim"] = n;
  j["omega"] = alg.omega.matrix().to_strings();
  ordered_json br = ordered_json::object();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      ordered_json v = ordered_json::array();
      for (const auto& x : alg.sc.bracket(a, b)) v.push_back(x.to_string());
      br[std::to_string(a + 1) + "," + std::to_string(b + 1)] = v;
    }
  j["brackets"] = br;
  return j;
}

inline std::string write_algebra(const OmegaAlgebra& alg) { return algebra_to_json(alg).dump(2) + "\n"; }

namespace detail {

inline std::size_t line_at(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline std::size_t line_of_key(const std::string& text, const std::string& key) {
  auto pos = text.find("\"" + key + "\"");
  return pos == std::string::npos ? 0 : line_at(text, pos);
}

inline std::string element_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(ErrorKind::ParseError, "field elements must be strings or integers");
}

}  // namespace detail

/// Parses an algebra file; every failure names the line it refers to.
inline OmegaAlgebra read_algebra(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, "line " + std::to_string(detail::line_at(text, e.byte ? e.byte - 1 : 0)) +
                                    ": malformed JSON (" + e.what() + ")");
  }
  auto at = [&](const std::string& key, const std::string& msg) {
    std::size_t line = detail::line_of_key(text, key);
    return (line ? "line " + std::to_string(line) + ": " : std::string()) + msg;
  };
  auto guarded = [&](const std::string& key, auto&& body) {
    try {
      return body();
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::ParseError, at(key, e.what()));
    } catch (const ExtensionRequired&) {
      throw;
    } catch (const Error& e) {
      fail(e.kind(), at(key, e.what()));
    } catch (const std::logic_error& e) {
      fail(ErrorKind::ParseError, at(key, e.what()));
    }
  };
  require(j.is_object(), ErrorKind::ParseError, "line 1: algebra file must be a JSON object");
  for (const char* key : {"field", "dim", "omega"})
    require(j.contains(key), ErrorKind::ParseError, std::string("missing key '") + key + "'");

  FieldPtr f = guarded("field", [&] { return parse_field(j.at("field").get<std::string>()); });
  std::size_t n = guarded("dim", [&] {
    long long d = j.at("dim").get<long long>();
    require(d >= 1 && d <= 32, ErrorKind::ParseError, "dim must be between 1 and 32");
    return static_cast<std::size_t>(d);
  });
  SkewForm omega = guarded("omega", [&] {
    const auto& w = j.at("omega");
    require(w.is_array() && w.size() == n, ErrorKind::ShapeMismatch, "omega must have " + std::to_string(n) + " rows");
    Matrix m(n, n, f);
    for (std::size_t r = 0; r < n; ++r) {
      require(w[r].is_array() && w[r].size() == n, ErrorKind::ShapeMismatch,
              "omega row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_element(detail::element_text(w[r][c]), f);
    }
    return SkewForm(std::move(m));
  });
  StructureConstants sc(n, f);
  if (j.contains("brackets")) {
    const auto& br = j.at("brackets");
    guarded("brackets", [&] {
      require(br.is_object(), ErrorKind::ParseError, "brackets must be an object");
      return 0;
    });
    for (auto it = br.begin(); it != br.end(); ++it) {
      const std::string key = it.key();
      guarded(key, [&] {
        auto comma = key.find(',');
        require(comma != std::string::npos, ErrorKind::ParseError, "bracket key '" + key + "' must be \"i,j\"");
        long long a = std::stoll(key.substr(0, comma)), b = std::stoll(key.substr(comma + 1));
        require(a >= 1 && b >= 1 && a <= static_cast<long long>(n) && b <= static_cast<long long>(n),
                ErrorKind::IndexOutOfRange, "bracket key '" + key + "' out of range");
        require(a < b, ErrorKind::ParseError, "bracket key '" + key + "' must have i < j");
        const auto& v = it.value();
        require(v.is_array() && v.size() == n, ErrorKind::LengthMismatch,
                "bracket '" + key + "' must have " + std::to_string(n) + " coefficients");
        Vector vec;
        for (const auto& x : v) vec.push_back(parse_element(detail::element_text(x), f));
        sc.set(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1), std::move(vec));
        return 0;
      });
    }
  }
  return OmegaAlgebra(std::move(sc), std::move(omega));
}

}  // namespace omegalie
