#include "hesspatch/chart.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hesspatch/errors.hpp"

namespace hesspatch {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("expected a comma-separated integer list, got '" + text + "'");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw std::invalid_argument("expected a comma-separated integer list, got '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

bool index_before(const Index& a, const Index& b) {
  if (a.first != b.first) return a.first > b.first;
  return a.second < b.second;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n < 1) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) + ": " + join_ints(values_));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(v);
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(v);
}

Permutation Permutation::parse(const std::string& text, int n) {
  if (text == "w0") return longest(n);
  Permutation w(parse_int_list(text));
  if (w.size() != n) throw std::invalid_argument("permutation " + text + " is not in S_" + std::to_string(n));
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(inv);
}

bool Permutation::is_longest() const { return *this == longest(size()); }

std::string Permutation::to_string() const { return join_ints(values_); }

bool Permutation::contains_321() const {
  const std::size_t n = values_.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    bool larger_before = false;
    bool smaller_after = false;
    for (std::size_t i = 0; i < j; ++i) larger_before = larger_before || values_[i] > values_[j];
    for (std::size_t k = j + 1; k < n; ++k) smaller_after = smaller_after || values_[k] < values_[j];
    if (larger_before && smaller_after) return true;
  }
  return false;
}

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n < 1) throw std::invalid_argument("empty Hessenberg function");
  for (int i = 1; i <= n; ++i) {
    int v = values_[static_cast<std::size_t>(i - 1)];
    if (v < i || v > n) {
      throw std::invalid_argument("Hessenberg function " + join_ints(values_) + " needs i <= h(i) <= n");
    }
    if (i > 1 && v < values_[static_cast<std::size_t>(i - 2)]) {
      throw std::invalid_argument("Hessenberg function " + join_ints(values_) + " is not nondecreasing");
    }
  }
}

HessenbergFunction HessenbergFunction::parse(const std::string& text) { return HessenbergFunction(parse_int_list(text)); }

HessenbergFunction HessenbergFunction::peterson(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::min(i + 1, n));
  return HessenbergFunction(v);
}

HessenbergFunction HessenbergFunction::full(int n) {
  return HessenbergFunction(std::vector<int>(static_cast<std::size_t>(n), n));
}

std::vector<HessenbergFunction> HessenbergFunction::enumerate(int n, bool indecomposable_only) {
  std::vector<HessenbergFunction> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i, int lower) -> void {
    if (i > n) {
      HessenbergFunction h(cur);
      if (!indecomposable_only || h.indecomposable()) out.push_back(h);
      return;
    }
    for (int v = std::max(lower, i); v <= n; ++v) {
      cur.push_back(v);
      self(self, i + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 1, 1);
  return out;
}

bool HessenbergFunction::indecomposable() const {
  for (int i = 1; i < size(); ++i) {
    if ((*this)(i) < i + 1) return false;
  }
  return true;
}

bool HessenbergFunction::is_full() const {
  return std::all_of(values_.begin(), values_.end(), [&](int v) { return v == size(); });
}

std::string HessenbergFunction::to_string() const { return join_ints(values_); }

RingPtr chart_ring(int n, const Permutation& w, const Field& field) {
  if (n < 2) throw std::invalid_argument("chart size must be at least 2");
  if (w.size() != n) throw std::invalid_argument("permutation size does not match n");
  std::vector<Index> positions;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) positions.emplace_back(w(i), j);
  }
  std::sort(positions.begin(), positions.end());
  std::vector<Variable> vars;
  for (const auto& [r, c] : positions) vars.push_back(Variable{chart_variable_name(r, c), Index{r, c}});
  std::optional<Grading> grading;
  if (w.is_longest()) {
    std::vector<int> weights;
    for (const auto& [r, c] : positions) weights.push_back(n + 1 - r - c);
    grading = Grading(weights);
  }
  return PolynomialRing::make(VariableSet(std::move(vars)), field, std::move(grading));
}

RingPtr w0_ring(int n, const Field& field) { return chart_ring(n, Permutation::longest(n), field); }

namespace {

PolyMatrix zero_matrix(int n, const RingPtr& ring) {
  return PolyMatrix(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(ring)));
}

PolyMatrix identity_matrix(int n, const RingPtr& ring) {
  PolyMatrix m = zero_matrix(n, ring);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = Polynomial::from_int(ring, 1);
  return m;
}

Polynomial chart_variable(const RingPtr& ring, int r, int c) {
  auto idx = ring->variables().find(r, c);
  if (!idx) throw std::invalid_argument("no chart variable " + chart_variable_name(r, c));
  return Polynomial::variable(ring, *idx);
}

}  // namespace

ChartMatrix build_chart(int n, const Permutation& w, const Field& field) {
  ChartMatrix chart;
  chart.n = n;
  chart.w = w;
  chart.ring = chart_ring(n, w, field);
  chart.entries = zero_matrix(n, chart.ring);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      auto& cell = chart.entries[static_cast<std::size_t>(w(i) - 1)][static_cast<std::size_t>(j - 1)];
      cell = i == j ? Polynomial::from_int(chart.ring, 1) : chart_variable(chart.ring, w(i), j);
    }
  }
  return chart;
}

PolyMatrix matrix_multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  const RingPtr& ring = a[0][0].ring();
  PolyMatrix c(n, std::vector<Polynomial>(cols, Polynomial(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

bool is_identity_matrix(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      const Polynomial& e = m[i][j];
      if (i == j) {
        if (!(e == Polynomial::from_int(e.ring(), 1))) return false;
      } else if (!e.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

PolyMatrix invert_chart(const ChartMatrix& chart) {
  const int n = chart.n;
  const auto un = static_cast<std::size_t>(n);
  // Undo the row permutation: row i of M is row w(i) of wM.
  PolyMatrix neg_l = zero_matrix(n, chart.ring);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      neg_l[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          -chart.entries[static_cast<std::size_t>(chart.w(i) - 1)][static_cast<std::size_t>(j - 1)];
    }
  }
  PolyMatrix sum = identity_matrix(n, chart.ring);
  PolyMatrix power = identity_matrix(n, chart.ring);
  for (int k = 1; k < n; ++k) {
    power = matrix_multiply(power, neg_l);
    for (std::size_t r = 0; r < un; ++r) {
      for (std::size_t c = 0; c < un; ++c) sum[r][c] += power[r][c];
    }
  }
  Permutation winv = chart.w.inverse();
  PolyMatrix inv = zero_matrix(n, chart.ring);
  for (std::size_t r = 0; r < un; ++r) {
    for (int c = 1; c <= n; ++c) inv[r][static_cast<std::size_t>(c - 1)] = sum[r][static_cast<std::size_t>(winv(c) - 1)];
  }
  if (!is_identity_matrix(matrix_multiply(inv, chart.entries))) {
    throw CheckFailure("invert_chart", "identity", "(wM)^{-1} (wM) is not the identity");
  }
  return inv;
}

Polynomial determinant(const PolyMatrix& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::from_int(ring, 1);
  std::map<std::uint32_t, Polynomial> state;
  state.emplace(0u, Polynomial::from_int(ring, 1));
  for (std::size_t r = 0; r < n; ++r) {
    std::map<std::uint32_t, Polynomial> next;
    for (const auto& [mask, value] : state) {
      for (std::size_t c = 0; c < n; ++c) {
        if ((mask >> c) & 1u) continue;
        if (m[r][c].is_zero()) continue;
        // Each used column to the right of c is one inversion.
        int inversions = std::popcount(mask >> (c + 1));
        Polynomial term = value * m[r][c];
        if (inversions % 2) term = -term;
        auto [it, inserted] = next.try_emplace(mask | (1u << c), term);
        if (!inserted) it->second += term;
      }
    }
    state = std::move(next);
  }
  auto it = state.find((1u << n) - 1);
  return it == state.end() ? Polynomial(ring) : it->second;
}

Polynomial cofactor_y(const ChartMatrix& chart, int i, int j) {
  const int n = chart.n;
  if (!chart.w.is_longest()) throw std::invalid_argument("cofactor_y is defined for the w0 chart");
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("cofactor_y index out of range");
  const int skip_row = n + 1 - j;
  const int skip_col = n + 1 - i;
  PolyMatrix minor;
  for (int r = 1; r <= n; ++r) {
    if (r == skip_row) continue;
    std::vector<Polynomial> row;
    for (int c = 1; c <= n; ++c) {
      if (c != skip_col) row.push_back(chart.entries[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]);
    }
    minor.push_back(std::move(row));
  }
  Polynomial det = determinant(minor, chart.ring);
  int exponent = n * (n - 1) / 2 + i + j;
  return exponent % 2 ? -det : det;
}

std::vector<Polynomial> PatchIdeal::generators() const {
  std::vector<Polynomial> out;
  for (const auto& [k, l] : indices_) out.push_back(entry(k, l));
  return out;
}

std::vector<Polynomial> PatchIdeal::generators(const Field& field) const {
  RingPtr target = ring_->with_field(field);
  std::vector<Polynomial> out;
  for (const auto& [k, l] : indices_) out.push_back(entry(k, l).change_ring(target));
  return out;
}

Ideal PatchIdeal::ideal(const Field& field) const { return Ideal(ring_->with_field(field), generators(field)); }

PatchIdeal hess_generators(int n, const Permutation& w, const HessenbergFunction& h) {
  if (h.size() != n) throw std::invalid_argument("Hessenberg function size does not match n");
  ChartMatrix chart = build_chart(n, w, Field::integers());
  PolyMatrix inv = invert_chart(chart);
  const auto un = static_cast<std::size_t>(n);
  // N (wM) shifts the rows of wM up by one.
  PolyMatrix shifted = zero_matrix(n, chart.ring);
  for (std::size_t r = 0; r + 1 < un; ++r) shifted[r] = chart.entries[r + 1];

  PatchIdeal patch;
  patch.n_ = n;
  patch.w_ = w;
  patch.h_ = h;
  patch.ring_ = chart.ring;
  patch.matrix_ = matrix_multiply(inv, shifted);
  for (int l = 1; l <= n; ++l) {
    for (int k = h(l) + 1; k <= n; ++k) patch.indices_.emplace_back(k, l);
  }
  std::sort(patch.indices_.begin(), patch.indices_.end(), index_before);
  return patch;
}

std::vector<Index> lower_indices(int n) {
  std::vector<Index> out;
  for (int k = n; k >= 1; --k) {
    for (int l = 1; l + 1 < k; ++l) out.emplace_back(k, l);
  }
  return out;
}

Polynomial recursion_f(int n, int k, int l) {
  if (l < 1 || k > n || k <= l + 1) {
    throw std::invalid_argument("recursion_f needs 1 <= l and l + 1 < k <= n");
  }
  RingPtr ring = w0_ring(n);
  // column[p] holds f_{p,l}
  std::vector<Polynomial> column(static_cast<std::size_t>(n) + 1, Polynomial(ring));
  column[static_cast<std::size_t>(l + 1)] = Polynomial::from_int(ring, 1);
  for (int row = l + 2; row <= k; ++row) {
    Polynomial value = chart_variable(ring, n + 2 - row, l);
    for (int p = l + 1; p <= row - 1; ++p) {
      value -= chart_variable(ring, n + 1 - row, p) * column[static_cast<std::size_t>(p)];
    }
    column[static_cast<std::size_t>(row)] = value;
  }
  return column[static_cast<std::size_t>(k)];
}

MonomialOrder order_n(int n) { return MonomialOrder::identity(static_cast<std::size_t>(n * (n - 1) / 2)); }

Grading chart_grading(int n) { return *w0_ring(n)->grading(); }

int mu(const HessenbergFunction& h) {
  const int n = h.size();
  int best = 0;
  for (int l = 1; l <= n; ++l) {
    if (h(l) < n) best = l;
  }
  if (best == 0) throw std::invalid_argument("mu is undefined for h = (n,...,n)");
  return best;
}

std::vector<Index> chain_indices(const HessenbergFunction& h, int m) {
  const int n = h.size();
  std::vector<Index> out;
  for (int l = 1; l <= n; ++l) {
    for (int k = h(l) + 1; k < n; ++k) out.emplace_back(k, l);
    if (h(l) < n && l > m) out.emplace_back(n, l);
  }
  std::sort(out.begin(), out.end(), index_before);
  return out;
}

Ideal ChainIdeal::ideal(const Field& field) const {
  std::vector<Polynomial> gens;
  if (generators.empty()) return Ideal(w0_ring(n, field));
  RingPtr target = generators.front().ring()->with_field(field);
  for (const auto& g : generators) gens.push_back(g.change_ring(target));
  return Ideal(target, std::move(gens));
}

ChainIdeal chain_ideal(int n, const HessenbergFunction& h, int m) {
  if (h.size() != n) throw std::invalid_argument("Hessenberg function size does not match n");
  if (!h.indecomposable()) throw std::invalid_argument("chain ideals need an indecomposable h");
  if (h.is_full()) throw std::invalid_argument("chain ideals are undefined for h = (n,...,n)");
  const int top = mu(h);
  if (m < 0 || m > top) {
    throw std::out_of_range("m = " + std::to_string(m) + " outside 0.." + std::to_string(top));
  }
  PatchIdeal patch = hess_generators(n, Permutation::longest(n), h);
  ChainIdeal chain;
  chain.n = n;
  chain.h = h;
  chain.m = m;
  chain.indices = chain_indices(h, m);
  for (const auto& [k, l] : chain.indices) chain.generators.push_back(patch.entry(k, l));
  return chain;
}

Polynomial relabel_down(const Polynomial& f, int n) {
  if (n < 3) throw std::invalid_argument("relabel_down needs n >= 3");
  const RingPtr& ring = f.ring();
  RingPtr target = w0_ring(n - 1, ring->field());
  if (ring->num_variables() != static_cast<std::size_t>(n * (n - 1) / 2)) {
    throw RingMismatchError("polynomial is not in the n-chart ring");
  }
  std::vector<std::size_t> map(ring->num_variables(), 0);
  std::vector<bool> used = f.variables_used();
  for (std::size_t v = 0; v < map.size(); ++v) {
    const auto& idx = ring->variables()[v].index;
    if (!idx) throw RingMismatchError("polynomial is not in a chart ring");
    if (idx->first == 1) {
      if (used[v]) throw DomainError("relabel_down: " + ring->variables()[v].name + " has no preimage");
      continue;
    }
    map[v] = *target->variables().find(idx->first - 1, idx->second);
  }
  return f.rename(target, map);
}

Polynomial relabel_up(const Polynomial& f, int n_minus_1) {
  const RingPtr& ring = f.ring();
  RingPtr target = w0_ring(n_minus_1 + 1, ring->field());
  std::vector<std::size_t> map(ring->num_variables(), 0);
  for (std::size_t v = 0; v < map.size(); ++v) {
    const auto& idx = ring->variables()[v].index;
    if (!idx) throw RingMismatchError("polynomial is not in a chart ring");
    map[v] = *target->variables().find(idx->first + 1, idx->second);
  }
  return f.rename(target, map);
}

HessenbergFunction relabel_function(const HessenbergFunction& h) {
  const int n = h.size();
  std::vector<int> v;
  for (int l = 1; l < n; ++l) v.push_back(h(l) < n ? h(l) : n - 1);
  return HessenbergFunction(v);
}

}  // namespace hesspatch
