#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hesspatch/chart.hpp"
#include "hesspatch/ideal.hpp"

namespace hesspatch {

/// Sum of the terms of f with the highest power of variable y (f itself when
/// y does not occur).
Polynomial initial_y_form(const Polynomial& f, std::size_t y);

/// Splits f = y^d q + r with d = deg_y(f), q free of y and deg_y(r) < d.
struct YSplit {
  unsigned degree = 0;
  Polynomial q;
  Polynomial r;
};
YSplit split_in_y(const Polynomial& f, std::size_t y);

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class GVDKind { degenerate, nondegenerate };
std::string to_string(GVDKind kind);

struct GVDStep {
  std::size_t y = 0;
  std::string y_name;
  /// Reduced Groebner basis of the decomposed ideal.
  std::vector<Polynomial> basis;
  /// C = <q_i> and N = <q_i : d_i = 0> (reduced bases).
  std::vector<Polynomial> c_gens;
  std::vector<Polynomial> n_gens;
  GVDKind kind = GVDKind::nondegenerate;
  std::optional<Polynomial> witness;
  std::vector<NamedCheck> checks;

  bool passed() const;
  /// Result of the named check; false when absent.
  bool check(const std::string& name) const;
};

/// Geometric vertex decomposition of I with respect to y. Uses the reduced
/// Groebner basis for `order` and verifies in_y(I) = C cap (N + <y>), N in I
/// and N in C by independent ideal computations. Throws CheckFailure when
/// y is not the greatest variable occurring in the basis (the sufficient
/// y-compatibility test).
GVDStep gvd_decompose(const Ideal& ideal, std::size_t y, const MonomialOrder& order);

enum class BaseCase { unit, indeterminates, empty };
std::string to_string(BaseCase b);

struct ChainStep {
  /// Chart size and Hessenberg function at this level of the recursion.
  int n = 0;
  HessenbergFunction h = HessenbergFunction::full(1);
  int m = 0;
  int depth = 0;
  GVDStep step;
};

struct RelabelRecord {
  int from_n = 0;
  HessenbergFunction from_h = HessenbergFunction::full(1);
  HessenbergFunction to_h = HessenbergFunction::full(1);
  bool generators_match = false;
};

struct GVDCertificate {
  int n = 0;
  HessenbergFunction h = HessenbergFunction::full(1);
  std::vector<ChainStep> steps;
  std::vector<RelabelRecord> relabels;
  BaseCase base_case = BaseCase::empty;
  int relabel_depth = 0;
  /// Complete-intersection data of the root ideal: the generator count
  /// equals the codimension of the initial ideal.
  std::size_t generator_count = 0;
  std::size_t codimension = 0;
  bool complete_intersection = false;
  /// Unmixedness is not checked computationally.
  std::string unmixedness = "unverified";

  bool accepted() const;
};

/// Chain certificate for I_{w0,h}: for m = 0..mu(h)-1 a degenerate step with
/// y = x[1,m+2], C = <1>, N = I(m+1) and witness -f_{n,m+1}, each with the
/// checks squarefree, gb_y_free, unit_y_coeff, nzd_colon, sum_decomposition
/// and intersection_identity; then relabel to (n-1, h') and continue until
/// the remaining ideal is zero. For h = (n,...,n) the certificate has no
/// steps. Throws CheckFailure naming the step and check on any failure.
GVDCertificate certify_w0_chain(int n, const HessenbergFunction& h);

struct GBLift {
  std::vector<Polynomial> basis;
  std::size_t pairs_checked = 0;
  int hilbert_bound = 0;
  /// dim (in I / in N) and dim (in C / in N) shifted by deg y, per degree.
  std::vector<std::int64_t> lifted_quotient_dims;
  std::vector<std::int64_t> shifted_quotient_dims;
};

/// Given bases {q_i} u {h_j} of C and {h_j} of N, and y-free r_i, returns
/// {y q_i + r_i} u {h_j} after verifying that it is a Groebner basis (all
/// S-polynomials reduce to zero) and that the graded pieces of in(I)/in(N)
/// and in(C)/in(N) agree after the shift by deg(y), for degrees up to dmax.
/// Throws CheckFailure when either verification fails.
GBLift gvd_gb_lift(const std::vector<Polynomial>& c_basis, const std::vector<Polynomial>& n_basis,
                   const std::vector<std::pair<Polynomial, Polynomial>>& pairs, std::size_t y,
                   const MonomialOrder& order, const Grading& grading, int dmax);

struct LinkageCheck {
  bool minors_in_n = false;
  std::size_t minors_checked = 0;
  std::size_t height_n = 0;
  std::size_t height_c = 0;
  /// ht(C) > ht(N), read off the initial ideals.
  bool height_condition = false;
};

/// Checks q_i r_j - q_j r_i in N for all i < j and reports the heights of N
/// and C = <q_i> + N.
LinkageCheck linkage_2minors_check(const std::vector<Polynomial>& qs, const std::vector<Polynomial>& rs,
                                   const Ideal& n_ideal, const MonomialOrder& order);

}  // namespace hesspatch
