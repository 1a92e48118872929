#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hesspatch/chart.hpp"
#include "hesspatch/ideal.hpp"

namespace hesspatch {

/// Contents of an ideal file:
///
///   {"ring": {"n": 4, "w": "w0", "field": "QQ", "grading": "chart"},
///    "generators": ["-x[1,3] + x[2,2]", ...]}
///
/// The ring is either a chart ring ("n" plus an optional "w", default w0) or
/// an explicit "variables" list. "field" is QQ, ZZ or GF(p) (default QQ).
/// "grading" is "chart" (chart rings of w0 only), "standard" or a list of
/// weights, one per variable.
struct IdealFile {
  RingPtr ring;
  Ideal ideal;
  std::optional<int> n;
  std::optional<Permutation> w;
};

/// "QQ", "ZZ" or "GF(p)". Throws ParseError otherwise.
Field parse_field(std::string_view text);

/// Throws ParseError for malformed JSON, unknown variables or bad generators.
IdealFile parse_ideal_file(std::string_view json_text);
/// Throws std::runtime_error when the file cannot be opened.
IdealFile read_ideal_file(const std::string& path);

/// Inverse of parse_ideal_file; generators are printed in canonical order.
std::string write_ideal_file(const IdealFile& file);

}  // namespace hesspatch
