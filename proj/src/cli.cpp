#include "hesspatch/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "hesspatch/errors.hpp"
#include "hesspatch/frobenius.hpp"
#include "hesspatch/gvd.hpp"
#include "hesspatch/io.hpp"
#include "hesspatch/parse.hpp"
#include "hesspatch/tci.hpp"

namespace hesspatch::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  int n = 0;
  std::string h;
  std::string w = "w0";
  std::uint64_t p = 0;
  int m = -1;
  std::vector<std::string> order;
  std::string presets;
  int dmax = -1;
  std::uint64_t seed = CompatOptions{}.seed;
  std::size_t samples = CompatOptions{}.samples;
  bool json = false;
  std::string out;
  std::string in;
};

struct Report {
  json doc;
  std::string text;
};

// ---- flag validation --------------------------------------------------------

int require_n(const Options& o, int lo, int hi) {
  if (o.n == 0) throw UsageError("--n is required");
  if (o.n < lo || o.n > hi) {
    throw UsageError(o.command + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
  }
  return o.n;
}

HessenbergFunction require_h(const Options& o, int n) {
  if (o.h.empty()) throw UsageError("--h is required");
  HessenbergFunction h = [&] {
    try {
      return HessenbergFunction::parse(o.h);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--h: ") + e.what());
    }
  }();
  if (h.size() != n) throw UsageError("--h has " + std::to_string(h.size()) + " values, expected " + std::to_string(n));
  return h;
}

Permutation require_w(const Options& o, int n) {
  try {
    return Permutation::parse(o.w, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--w: ") + e.what());
  }
}

void require_w0(const Options& o, int n) {
  if (!require_w(o, n).is_longest()) throw UsageError(o.command + " is defined for the w0 chart only");
}

std::optional<Field> prime_field(const Options& o) {
  if (o.p == 0) return std::nullopt;
  if (!is_prime(o.p) || o.p >= (std::uint64_t{1} << 32)) throw UsageError("--p must be a prime below 2^32");
  return Field::prime(o.p);
}

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

// Splits "x[1,2],x[1,3]" at commas outside brackets.
std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

MonomialOrder parse_order(const std::string& text, const RingPtr& ring) {
  if (text == "default") return MonomialOrder::identity(ring->num_variables());
  try {
    return MonomialOrder::from_names(ring->variables(), split_names(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--order: ") + e.what());
  }
}

MonomialOrder single_order(const Options& o, const RingPtr& ring) {
  if (o.order.size() > 1) throw UsageError("--order may be given once for " + o.command);
  return parse_order(o.order.empty() ? "default" : o.order.front(), ring);
}

// ---- input ideals -----------------------------------------------------------

struct Input {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::vector<std::string> labels;
  std::optional<int> n;
  std::optional<Permutation> w;
  std::optional<HessenbergFunction> h;
  std::optional<int> m;
};

// Generators from --in, or from --n/--h/--w (and --m for the chain ideals),
// converted to `field` when given.
Input load_input(const Options& o, std::optional<Field> field) {
  Input in;
  if (!o.in.empty()) {
    if (o.n || !o.h.empty() || o.m >= 0) throw UsageError("--in cannot be combined with --n, --h or --m");
    IdealFile file = [&] {
      try {
        return read_ideal_file(o.in);
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
      }
    }();
    in.ring = field ? file.ring->with_field(*field) : file.ring;
    for (const auto& g : file.ideal.generators()) in.gens.push_back(g.change_ring(in.ring));
    for (std::size_t i = 0; i < in.gens.size(); ++i) in.labels.push_back("g" + std::to_string(i + 1));
    in.n = file.n;
    in.w = file.w;
    return in;
  }
  int n = require_n(o, 2, 8);
  HessenbergFunction h = require_h(o, n);
  Permutation w = require_w(o, n);
  in.n = n;
  in.w = w;
  in.h = h;
  Field target = field.value_or(Field::integers());
  std::vector<Index> indices;
  std::vector<Polynomial> gens;
  if (o.m >= 0) {
    if (!w.is_longest()) throw UsageError("--m is defined for the w0 chart only");
    if (!h.indecomposable() || h.is_full()) throw UsageError("--m needs an indecomposable h other than (n,...,n)");
    if (o.m > mu(h)) throw UsageError("--m must be at most " + std::to_string(mu(h)) + " for this h");
    ChainIdeal chain = chain_ideal(n, h, o.m);
    indices = chain.indices;
    gens = chain.generators;
    in.m = o.m;
  } else {
    PatchIdeal patch = hess_generators(n, w, h);
    indices = patch.indices();
    gens = patch.generators();
  }
  in.ring = chart_ring(n, w, target);
  for (const auto& g : gens) in.gens.push_back(g.change_ring(in.ring));
  for (const auto& [k, l] : indices) in.labels.push_back("f[" + std::to_string(k) + "," + std::to_string(l) + "]");
  return in;
}

// ---- json helpers -----------------------------------------------------------

json h_json(const HessenbergFunction& h) { return h.values(); }

std::string h_text(const HessenbergFunction& h) { return "(" + h.to_string() + ")"; }

json poly_list(const std::vector<Polynomial>& polys, const MonomialOrder& order) {
  json out = json::array();
  for (const auto& f : polys) out.push_back(format_poly(f, order));
  return out;
}

json monomial_list(const MonomialIdeal& ideal, const VariableSet& vars) {
  json out = json::array();
  for (const auto& m : ideal.generators()) out.push_back(format_monomial(m, vars));
  return out;
}

std::string monomial_ideal_text(const MonomialIdeal& ideal, const VariableSet& vars) {
  std::string s = "<";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) s += ", ";
    s += format_monomial(ideal.generators()[i], vars);
  }
  return s + ">";
}

json order_names(const MonomialOrder& order, const VariableSet& vars) {
  json out = json::array();
  for (std::size_t v : order.priority()) out.push_back(vars[v].name);
  return out;
}

json input_json(const Input& in, const MonomialOrder& order) {
  json j;
  if (in.n) j["n"] = *in.n;
  if (in.w) j["w"] = in.w->is_longest() ? "w0" : in.w->to_string();
  if (in.h) j["h"] = h_json(*in.h);
  if (in.m) j["m"] = *in.m;
  j["field"] = in.ring->field().name();
  j["order"] = order_names(order, in.ring->variables());
  return j;
}

const char* mark(bool ok) { return ok ? "ok" : "FAILED"; }
const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string checks_text(const json& checks) {
  std::string s;
  for (const auto& [name, value] : checks.items()) {
    if (!s.empty()) s += " ";
    s += name + "=" + mark(value.get<bool>());
  }
  return s;
}

// Named checks live in "checks" objects, plus the per-node and per-edge
// fields of the splitting reports.
bool any_check_failed(const json& j) {
  static const std::set<std::string> kCheckKeys = {"frob_power_membership", "verified", "trace_is_one", "passed"};
  if (j.is_array()) {
    return std::any_of(j.begin(), j.end(), [](const json& e) { return any_check_failed(e); });
  }
  if (!j.is_object()) return false;
  for (const auto& [key, value] : j.items()) {
    if (key == "checks" && value.is_object()) {
      for (const auto& [name, v] : value.items()) {
        if (v.is_boolean() && !v.get<bool>()) return true;
      }
    } else if (value.is_boolean() && kCheckKeys.count(key) && !value.get<bool>()) {
      return true;
    } else if (any_check_failed(value)) {
      return true;
    }
  }
  return false;
}

// ---- commands ---------------------------------------------------------------

Report cmd_gens(const Options& o) {
  Input in = load_input(o, prime_field(o));
  MonomialOrder order = single_order(o, in.ring);
  Report r;
  r.doc = input_json(in, order);
  json gens = json::array();
  for (std::size_t i = 0; i < in.gens.size(); ++i) {
    std::string poly = format_poly(in.gens[i], order);
    gens.push_back({{"label", in.labels[i]}, {"poly", poly}});
    r.text += in.labels[i] + " = " + poly + "\n";
  }
  if (in.gens.empty()) r.text += "(no generators: the ideal is zero)\n";
  r.doc["generators"] = gens;
  return r;
}

Grading hilbert_grading(const RingPtr& ring, std::string& kind) {
  if (ring->grading() && ring->grading()->positive()) {
    kind = "ring";
    return *ring->grading();
  }
  kind = "standard";
  return Grading(std::vector<int>(ring->num_variables(), 1));
}

Report cmd_gb(const Options& o) {
  Input in = load_input(o, prime_field(o).value_or(Field::rationals()));
  MonomialOrder order = single_order(o, in.ring);
  if (o.dmax > 40) throw UsageError("--dmax must be at most 40");
  const VariableSet& vars = in.ring->variables();

  GroebnerResult gb = buchberger(in.gens, order);
  GroebnerCheck check = check_groebner_basis(gb.basis, order);
  bool gens_reduce = std::all_of(in.gens.begin(), in.gens.end(),
                                 [&](const Polynomial& g) { return normal_form(g, gb.basis, order).is_zero(); });
  MonomialIdeal lead = lead_monomial_ideal(gb.basis, order);
  std::size_t dim = monomial_dimension(lead);
  RadicalCertificate radical =
      lead.is_squarefree() ? RadicalCertificate::radical_by_squarefree_initial : RadicalCertificate::unknown;

  Report r;
  r.doc = input_json(in, order);
  r.doc["basis"] = poly_list(gb.basis, order);
  r.doc["minimal_basis"] = poly_list(gb.minimal_basis, order);
  r.doc["initial_ideal"] = monomial_list(lead, vars);
  r.doc["squarefree_initial"] = lead.is_squarefree();
  r.doc["indeterminates"] = lead.is_generated_by_variables();
  r.doc["dimension"] = dim;
  r.doc["radical_certificate"] = to_string(radical);
  r.doc["stats"] = {{"pairs_created", gb.stats.pairs_created},
                    {"pairs_reduced", gb.stats.pairs_reduced},
                    {"product_criterion_skips", gb.stats.product_criterion_skips},
                    {"chain_criterion_skips", gb.stats.chain_criterion_skips},
                    {"zero_reductions", gb.stats.zero_reductions},
                    {"elements_added", gb.stats.elements_added}};
  r.doc["checks"] = {{"s_pairs_reduce", check.is_basis}, {"generators_reduce", gens_reduce}};

  std::ostringstream t;
  t << "order: " << order.describe(vars) << "\n";
  t << "reduced basis (" << gb.basis.size() << "):\n";
  for (const auto& g : gb.basis) t << "  " << format_poly(g, order) << "\n";
  t << "initial ideal: " << monomial_ideal_text(lead, vars) << "\n";
  t << "squarefree: " << yes_no(lead.is_squarefree()) << ", indeterminates: " << yes_no(lead.is_generated_by_variables())
    << ", dimension: " << dim << ", radical: " << to_string(radical) << "\n";
  if (o.dmax >= 0) {
    std::string kind;
    Grading grading = hilbert_grading(in.ring, kind);
    auto values = hilbert_function(lead, grading, o.dmax);
    r.doc["hilbert"] = {{"grading", kind}, {"weights", grading.weights()}, {"values", values}};
    t << "hilbert (" << kind << " grading):";
    for (auto v : values) t << " " << v;
    t << "\n";
  }
  t << "checks: " << checks_text(r.doc["checks"]) << "\n";
  r.text = t.str();
  return r;
}

std::string tci_reason(TCIFailure::Reason reason) {
  switch (reason) {
    case TCIFailure::Reason::non_variable_lead:
      return "non_variable_lead";
    case TCIFailure::Reason::non_unit_lead:
      return "non_unit_lead";
    case TCIFailure::Reason::later_occurrence:
      return "later_occurrence";
  }
  return "?";
}

Report cmd_tci(const Options& o) {
  Input in = load_input(o, prime_field(o).value_or(Field::rationals()));
  MonomialOrder order = single_order(o, in.ring);
  const VariableSet& vars = in.ring->variables();
  TCIResult result = detect_tci(in.gens, order);

  Report r;
  r.doc = input_json(in, order);
  std::ostringstream t;
  t << "order: " << order.describe(vars) << "\n";
  if (!result.witness) {
    const TCIFailure& f = *result.failure;
    json failure = {{"reason", tci_reason(f.reason)}, {"generator", in.labels[f.j]}, {"message", f.message}};
    if (f.m) failure["later_generator"] = in.labels[*f.m];
    r.doc["tci"] = false;
    r.doc["failure"] = failure;
    r.doc["checks"] = {{"tci", false}};
    t << "not a triangular complete intersection: " << f.message << "\n";
    r.text = t.str();
    return r;
  }
  const TCIWitness& w = *result.witness;
  TCIConclusions c = tci_conclusions(w);
  GroebnerResult gb = buchberger(in.gens, order);
  std::vector<Polynomial> monic;
  for (const auto& g : c.groebner_basis) monic.push_back(g.monic(order));
  bool gb_agrees = interreduce(monic, order) == gb.basis;
  MonomialIdeal lead = lead_monomial_ideal(gb.basis, order);
  bool initial_agrees = lead.generators() == c.initial_ideal.generators();
  bool dimension_agrees = monomial_dimension(lead) == c.dimension;

  json leads = json::array();
  for (std::size_t v : w.lead_variables) leads.push_back(vars[v].name);
  r.doc["tci"] = true;
  r.doc["lead_variables"] = leads;
  r.doc["initial_ideal"] = monomial_list(c.initial_ideal, vars);
  r.doc["dimension"] = c.dimension;
  r.doc["checks"] = {{"tci", true},
                     {"gb_agrees", gb_agrees},
                     {"initial_ideal_agrees", initial_agrees},
                     {"dimension_agrees", dimension_agrees}};
  t << "triangular complete intersection, lead variables:";
  for (std::size_t v : w.lead_variables) t << " " << vars[v].name;
  t << "\ninitial ideal: " << monomial_ideal_text(c.initial_ideal, vars) << "\n";
  t << "dimension: " << c.dimension << "\n";
  t << "checks: " << checks_text(r.doc["checks"]) << "\n";
  r.text = t.str();
  return r;
}

Report cmd_gvd_cert(const Options& o) {
  int n = require_n(o, 3, 8);
  HessenbergFunction h = require_h(o, n);
  require_w0(o, n);
  if (!h.indecomposable()) throw UsageError("gvd-cert needs an indecomposable h");
  GVDCertificate cert = certify_w0_chain(n, h);

  Report r;
  std::ostringstream t;
  json steps = json::array();
  for (const auto& s : cert.steps) {
    RingPtr ring = w0_ring(s.n);
    MonomialOrder order = order_n(s.n);
    json checks = json::object();
    for (const auto& c : s.step.checks) checks[c.name] = c.passed;
    std::string witness = s.step.witness ? format_poly(*s.step.witness, order) : "";
    steps.push_back({{"n", s.n},
                     {"h", h_json(s.h)},
                     {"m", s.m},
                     {"depth", s.depth},
                     {"y", s.step.y_name},
                     {"witness", witness},
                     {"kind", to_string(s.step.kind)},
                     {"c_gens", poly_list(s.step.c_gens, order)},
                     {"n_gens", poly_list(s.step.n_gens, order)},
                     {"checks", checks}});
    t << "n=" << s.n << " h=" << h_text(s.h) << " m=" << s.m << ": y=" << s.step.y_name << " "
      << to_string(s.step.kind) << ", witness " << witness << "\n";
    t << " ";
    for (const auto& c : s.step.checks) t << " " << c.name << "=" << mark(c.passed);
    t << "\n";
  }
  json relabels = json::array();
  for (const auto& rel : cert.relabels) {
    relabels.push_back({{"from_n", rel.from_n},
                        {"from_h", h_json(rel.from_h)},
                        {"to_n", rel.from_n - 1},
                        {"to_h", h_json(rel.to_h)},
                        {"checks", {{"generators_match", rel.generators_match}}}});
    t << "relabel n=" << rel.from_n << " -> n=" << rel.from_n - 1 << " h=" << h_text(rel.to_h)
      << ": generators_match=" << mark(rel.generators_match) << "\n";
  }
  t << "terminal: base_case=" << to_string(cert.base_case) << " relabel_depth=" << cert.relabel_depth << "\n";
  t << "complete intersection: " << cert.generator_count << " generators, codimension " << cert.codimension << " ("
    << yes_no(cert.complete_intersection) << "); unmixedness " << cert.unmixedness << "\n";

  r.doc = {{"n", n},
           {"h", h_json(h)},
           {"steps", steps},
           {"relabels", relabels},
           {"terminal", {{"base_case", to_string(cert.base_case)}, {"relabel_depth", cert.relabel_depth}}},
           {"generator_count", cert.generator_count},
           {"codimension", cert.codimension},
           {"complete_intersection", cert.complete_intersection},
           {"unmixedness", cert.unmixedness},
           {"checks", {{"accepted", cert.accepted()}}}};
  r.text = t.str();
  return r;
}

json unit_check_json(const UnitCheck& u) {
  return {{"leading_term_is_product", u.hypothesis},
          {"trace_is_one", u.result},
          {"power_terms", u.power_terms},
          {"within_budget", u.within_budget}};
}

std::string unit_check_text(int n, std::uint64_t p, const UnitCheck& u) {
  std::ostringstream t;
  t << "splitting F_n^(p-1), n=" << n << " p=" << p << ": Tr = 1 " << mark(u.result) << " (" << u.power_terms
    << " terms" << (u.within_budget ? "" : ", over budget") << ")\n";
  return t.str();
}

json node_json(const HessenbergFunction& h, const std::vector<Polynomial>& gens, const CompatReport& rep,
               const MonomialOrder& order) {
  return {{"h", h_json(h)},
          {"generators", poly_list(gens, order)},
          {"frob_power_membership", rep.frob_power_membership},
          {"sampled_direct_checks",
           {{"count", rep.sampled_count}, {"failures", rep.sampled_failures}, {"passed", rep.sampled_failures == 0}}}};
}

std::string node_text(const HessenbergFunction& h, const CompatReport& rep) {
  std::ostringstream t;
  t << "h=" << h_text(h) << ": frob_power_membership=" << mark(rep.frob_power_membership) << ", sampled "
    << rep.sampled_count << " with " << rep.sampled_failures << " failures\n";
  return t.str();
}

CompatOptions compat_options(const Options& o) {
  CompatOptions c;
  c.seed = o.seed;
  c.samples = o.samples;
  return c;
}

std::uint64_t require_split_prime(const Options& o) {
  if (o.p == 0) throw UsageError("--p is required");
  prime_field(o);
  if (o.p > 7) throw UsageError("--p must be at most 7 for the splitting reports");
  return o.p;
}

Report cmd_poset(const Options& o) {
  int n = require_n(o, 3, 6);
  require_w0(o, n);
  std::uint64_t p = require_split_prime(o);
  SplitPoset poset = split_poset(n, p, compat_options(o));
  MonomialOrder order = order_n(n);

  Report r;
  std::string text = unit_check_text(n, p, poset.unit_check);
  json nodes = json::array();
  for (const auto& node : poset.nodes) {
    nodes.push_back(node_json(node.h, node.generators, node.report, order));
    text += node_text(node.h, node.report);
  }
  json edges = json::array();
  for (const auto& e : poset.edges) {
    const auto& from = poset.nodes[e.from].h;
    const auto& to = poset.nodes[e.to].h;
    edges.push_back({{"from", h_json(from)}, {"to", h_json(to)}, {"verified", e.verified}});
    text += "I" + h_text(to) + " in I" + h_text(from) + ": " + mark(e.verified) + "\n";
  }
  r.doc = {{"n", n},
           {"p", p},
           {"splitting", "F_n^(p-1)"},
           {"seed", o.seed},
           {"unit_check", unit_check_json(poset.unit_check)},
           {"nodes", nodes},
           {"edges", edges}};
  r.text = text;
  return r;
}

Report cmd_frob(const Options& o) {
  if (o.h.empty()) return cmd_poset(o);
  int n = require_n(o, 3, 6);
  HessenbergFunction h = require_h(o, n);
  require_w0(o, n);
  std::uint64_t p = require_split_prime(o);
  SplittingElement s =
      SplittingElement::from_power(build_F_n(n), p, order_n(n), SplittingElement::Provenance::f_n_power);
  Report r;
  r.doc = {{"n", n},
           {"p", p},
           {"splitting", "F_n^(p-1)"},
           {"seed", o.seed},
           {"unit_check", unit_check_json(s.unit_check())}};
  r.text = unit_check_text(n, p, s.unit_check());
  if (!s.unit_check().result) return r;
  PatchIdeal patch = hess_generators(n, Permutation::longest(n), h);
  Field field = Field::prime(p);
  CompatReport rep = compat_check(s, patch.ideal(field), p, compat_options(o));
  r.doc["nodes"] = json::array({node_json(h, patch.generators(field), rep, order_n(n))});
  r.text += node_text(h, rep);
  return r;
}

std::vector<std::pair<std::string, MonomialOrder>> explore_orders(const Options& o, const RingPtr& ring) {
  std::vector<std::pair<std::string, MonomialOrder>> out;
  for (const auto& text : o.order) out.emplace_back(text, parse_order(text, ring));
  if (!o.presets.empty()) {
    const VariableSet& vars = ring->variables();
    std::vector<std::size_t> by_row(vars.size());
    for (std::size_t i = 0; i < by_row.size(); ++i) by_row[i] = i;
    std::sort(by_row.begin(), by_row.end(), [&](std::size_t a, std::size_t b) { return *vars[a].index < *vars[b].index; });
    for (const auto& name : split_names(o.presets)) {
      std::vector<std::size_t> priority = by_row;
      if (name == "col-major") {
        std::sort(priority.begin(), priority.end(), [&](std::size_t a, std::size_t b) {
          auto [ra, ca] = *vars[a].index;
          auto [rb, cb] = *vars[b].index;
          return std::pair(ca, ra) < std::pair(cb, rb);
        });
      } else if (name == "reverse") {
        std::reverse(priority.begin(), priority.end());
      } else if (name != "row-major") {
        throw UsageError("unknown order preset '" + name + "' (row-major, col-major, reverse)");
      }
      out.emplace_back(name, MonomialOrder(priority));
    }
  }
  if (out.empty()) out.emplace_back("default", MonomialOrder::identity(ring->num_variables()));
  return out;
}

Report cmd_explore(const Options& o) {
  if (o.n > 5) throw UsageError("explore supports n <= 5");
  int n = require_n(o, 2, 5);
  HessenbergFunction h = require_h(o, n);
  Permutation w = require_w(o, n);
  RingPtr ring = chart_ring(n, w, Field::rationals());
  auto orders = explore_orders(o, ring);
  PatchIdeal patch = hess_generators(n, w, h);
  std::vector<Polynomial> gens = patch.generators(Field::rationals());
  const VariableSet& vars = ring->variables();

  Report r;
  std::ostringstream t;
  t << "w=" << w.to_string() << " h=" << h_text(h) << ": [3,2,1]-embedding " << yes_no(w.contains_321()) << "\n";
  json results = json::array();
  for (const auto& [name, order] : orders) {
    GroebnerResult gb = buchberger(gens, order);
    bool is_basis = check_groebner_basis(gb.basis, order).is_basis;
    MonomialIdeal lead = lead_monomial_ideal(gb.basis, order);
    results.push_back({{"name", name},
                       {"order", order_names(order, vars)},
                       {"basis", poly_list(gb.basis, order)},
                       {"initial_ideal", monomial_list(lead, vars)},
                       {"squarefree", lead.is_squarefree()},
                       {"indeterminates", lead.is_generated_by_variables()},
                       {"checks", {{"s_pairs_reduce", is_basis}}}});
    t << "order " << name << " (" << order.describe(vars) << "):\n";
    for (const auto& g : gb.basis) t << "  " << format_poly(g, order) << "\n";
    t << "  initial ideal " << monomial_ideal_text(lead, vars) << "\n";
    t << "  squarefree: " << yes_no(lead.is_squarefree())
      << ", indeterminates: " << yes_no(lead.is_generated_by_variables()) << "\n";
  }
  r.doc = {{"n", n},
           {"w", w.is_longest() ? "w0" : w.to_string()},
           {"h", h_json(h)},
           {"contains_321", w.contains_321()},
           {"orders", results}};
  r.text = t.str();
  return r;
}

Report dispatch(const Options& o) {
  if (o.command == "gens") return cmd_gens(o);
  if (o.command == "gb") return cmd_gb(o);
  if (o.command == "tci") return cmd_tci(o);
  if (o.command == "gvd-cert") return cmd_gvd_cert(o);
  if (o.command == "frob") return cmd_frob(o);
  if (o.command == "poset") {
    if (!o.h.empty()) throw UsageError("poset covers every indecomposable h; use frob --h for one");
    return cmd_poset(o);
  }
  if (o.command == "explore") return cmd_explore(o);
  throw UsageError("unknown command " + o.command);
}

void add_flags(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Chart size");
  sub->add_option("--h", o.h, "Hessenberg function, e.g. 2,3,4,5,5");
  sub->add_option("--w", o.w, "Chart permutation: w0 or one-line notation such as 2,1,3");
  sub->add_option("--p", o.p, "Prime characteristic");
  sub->add_option("--m", o.m, "Chain ideal level I(m) (w0 only)");
  sub->add_option("--order", o.order, "default, or the variables from greatest to least");
  sub->add_option("--orders", o.presets, "Order presets for explore: row-major,col-major,reverse");
  sub->add_option("--dmax", o.dmax, "Report the Hilbert function of the initial ideal up to this degree");
  sub->add_option("--seed", o.seed, "Seed for sampled checks");
  sub->add_option("--samples", o.samples, "Number of sampled direct checks per ideal");
  sub->add_option("--in", o.in, "Read the ideal from a JSON ideal file");
  sub->add_option("--out", o.out, "Write the report to this file");
  sub->add_flag("--json", o.json, "Emit the report as JSON");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hessenberg patch ideals: generators, Groebner bases, GVD certificates and Frobenius splittings",
               "hesspatch"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gens", "Print the generators of a patch ideal"},
      {"gb", "Reduced Groebner basis and initial ideal"},
      {"tci", "Triangular complete intersection test"},
      {"gvd-cert", "Geometric vertex decomposition certificate for the w0 chain"},
      {"frob", "Frobenius splitting report (one h with --h, else the whole poset)"},
      {"poset", "Compatibly split poset of all indecomposable h"},
      {"explore", "Groebner bases of a general w patch under several orders"}};
  app.set_help_flag("--help", "Print this help message and exit");
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->set_help_flag("--help", "Print this help message and exit");
    add_flags(sub, o);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  o.command = app.get_subcommands().front()->get_name();

  Report report;
  try {
    report = dispatch(o);
  } catch (const CheckFailure& e) {
    report.doc = {{"failed", {{"step", e.step()}, {"check", e.check()}, {"detail", e.what()}}},
                  {"checks", {{e.check(), false}}}};
    report.text = std::string("check failed: ") + e.what() + "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  json doc = {{"command", o.command}};
  doc.update(report.doc);
  report.doc = std::move(doc);

  std::string payload = o.json ? report.doc.dump(2) + "\n" : report.text;
  if (o.out.empty()) {
    out << payload;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << payload)) {
      err << "error: cannot write " << o.out << "\n";
      return kUsageError;
    }
  }
  return any_check_failed(report.doc) ? kCheckFailed : kOk;
}

}  // namespace hesspatch::cli
