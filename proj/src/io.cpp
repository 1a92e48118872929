#include "hesspatch/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hesspatch/errors.hpp"
#include "hesspatch/parse.hpp"

namespace hesspatch {

using nlohmann::json;

Field parse_field(std::string_view text) {
  if (text == "QQ") return Field::rationals();
  if (text == "ZZ") return Field::integers();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string digits(text.substr(3, text.size() - 4));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 12) {
      std::uint64_t p = std::stoull(digits);
      if (is_prime(p)) return Field::prime(p);
    }
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected QQ, ZZ or GF(p) with p prime)", 0);
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError("ideal file: " + what, 0); }

RingPtr ring_from_json(const json& desc, std::optional<int>& n_out, std::optional<Permutation>& w_out) {
  if (!desc.is_object()) fail("\"ring\" must be an object");
  Field field = desc.contains("field") ? parse_field(desc.at("field").get<std::string>()) : Field::rationals();
  RingPtr ring;
  if (desc.contains("n")) {
    int n = desc.at("n").get<int>();
    if (n < 2 || n > 8) fail("\"n\" must be between 2 and 8");
    std::string w_text = desc.contains("w") ? desc.at("w").get<std::string>() : "w0";
    Permutation w = Permutation::parse(w_text, n);
    ring = chart_ring(n, w, field);
    n_out = n;
    w_out = w;
  } else if (desc.contains("variables")) {
    ring = PolynomialRing::make(VariableSet::from_names(desc.at("variables").get<std::vector<std::string>>()), field);
  } else {
    fail("\"ring\" needs either \"n\" or \"variables\"");
  }
  if (desc.contains("grading")) {
    const json& g = desc.at("grading");
    if (g.is_string()) {
      std::string kind = g.get<std::string>();
      if (kind == "chart") {
        if (!w_out || !w_out->is_longest()) fail("the chart grading is defined for w0 charts only");
      } else if (kind == "standard") {
        ring = ring->with_grading(Grading(std::vector<int>(ring->num_variables(), 1)));
      } else {
        fail("unknown grading '" + kind + "'");
      }
    } else {
      auto weights = g.get<std::vector<int>>();
      if (weights.size() != ring->num_variables()) fail("grading needs one weight per variable");
      ring = ring->with_grading(Grading(std::move(weights)));
    }
  }
  return ring;
}

}  // namespace

IdealFile parse_ideal_file(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("ideal file: ") + e.what(), e.byte);
  }
  try {
    if (!doc.is_object() || !doc.contains("ring")) fail("missing \"ring\"");
    std::optional<int> n;
    std::optional<Permutation> w;
    RingPtr ring = ring_from_json(doc.at("ring"), n, w);
    std::vector<Polynomial> gens;
    if (doc.contains("generators")) {
      for (const auto& g : doc.at("generators")) gens.push_back(parse_poly(g.get<std::string>(), ring));
    }
    return IdealFile{ring, Ideal(ring, std::move(gens)), n, w};
  } catch (const json::exception& e) {
    fail(e.what());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

IdealFile read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal_file(buf.str());
}

std::string write_ideal_file(const IdealFile& file) {
  json ring;
  if (file.n) {
    ring["n"] = *file.n;
    ring["w"] = file.w && !file.w->is_longest() ? file.w->to_string() : "w0";
  } else {
    json names = json::array();
    for (const auto& v : file.ring->variables().all()) names.push_back(v.name);
    ring["variables"] = names;
  }
  ring["field"] = file.ring->field().name();
  if (file.ring->grading() && !(file.w && file.w->is_longest())) ring["grading"] = file.ring->grading()->weights();
  json gens = json::array();
  for (const auto& g : file.ideal.generators()) gens.push_back(format_poly(g));
  json doc;
  doc["ring"] = ring;
  doc["generators"] = gens;
  return doc.dump(2) + "\n";
}

}  // namespace hesspatch
