#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torunits/parallel.hpp"
#include "torunits/toral_action.hpp"

namespace torunits {

/// M(d) = {m >= 1 : phi(m) <= d^2}, ascending.
std::vector<long> power_test_set(int d);

struct TotalIrreducibilityCertificate {
  UnitWord word;
  std::vector<long> exponents;        // M(d)
  std::vector<int> minpoly_degrees;   // deg minpoly(u^m), all equal to d
};

/// Free words enumerated by |e|_1 = 1, 2, ..., budget, each shell in
/// lexicographic order of e; the first word passing the power test wins.
std::vector<std::vector<long>> enumerate_words(int rank, int budget);

std::optional<TotalIrreducibilityCertificate> totally_irreducible_unit_search(const UnitGroupData& units, int budget,
                                                                              Exec exec = Exec::parallel);
/// Re-verification by a different route: charpoly(rho(u^m)) irreducible for all m.
bool recheck_certificate(const ToralRep& rep, const TotalIrreducibilityCertificate& cert);

struct CMCertificate {
  FieldElement conjugation;  // g(theta)
  bool vanishes = false;     // f(g(theta)) = 0
  bool involution = false;   // g(g(theta)) = theta, g != id
  bool embeddings_match = false;
  /// Minimal polynomial of theta + g(theta); degree d/2 with only real roots.
  RationalPolynomial fixed_field_poly;
  bool fixed_field_totally_real = false;

  bool valid() const { return vanishes && involution && embeddings_match && fixed_field_totally_real; }
};

/// Image of a under the automorphism with theta -> gt.
FieldElement apply_automorphism(const NumberField& k, const FieldElement& gt, const FieldElement& a);

enum class CMState { cm, not_cm, undetermined };
std::string to_string(CMState s);

struct CMStatus {
  CMState state = CMState::undetermined;
  /// "real embedding", "totally irreducible unit", "conjugation certificate", or why undetermined.
  std::string reason;
  std::optional<CMCertificate> cm;
  std::optional<TotalIrreducibilityCertificate> ti;
};

/// Conjugation search: solve h(alpha_j) = conj(alpha_j) over all roots,
/// rationally reconstruct h, then verify exactly.
std::optional<CMCertificate> find_cm_conjugation(const NumberField& field);
CMStatus is_cm(const UnitGroupData& units, int budget);

struct ExpandingCertificate {
  int embedding = 0;
  UnitWord word;
  Rational abs_lower;  // certified lower bound on |sigma(u)|, > 1
};

/// Throws ValidationError at rank 0 and UndeterminedError when the budget is exhausted.
ExpandingCertificate expanding_unit(const ToralRep& rep, const EmbeddingHandle& embedding, int budget);

struct BerendConditions {
  std::optional<TotalIrreducibilityCertificate> c1;
  std::vector<std::optional<ExpandingCertificate>> c2;
  bool c3 = false;
  int rank = 0;

  bool c2_complete() const;
};

BerendConditions berend_conditions(const ToralRep& rep, int budget);

enum class Verdict { id, not_id, undetermined };
std::string to_string(Verdict v);

struct IDVerdict {
  Verdict verdict = Verdict::undetermined;
  int rank = 0;
  CMStatus cm;
  BerendConditions conditions;
  Verdict field_route = Verdict::undetermined;
  Verdict matrix_route = Verdict::undetermined;
  /// True unless both routes decided and differ (which throws InternalError).
  bool agreement = true;
  std::string rep_id;
};

/// Field-level (not CM and rank >= 2) against the three-condition check.
IDVerdict id_verdict(const ToralRep& rep, int budget);

/// m in Z^d outside the real span of every listed sublattice (columns span).
std::vector<Integer> avoid_sublattices(const std::vector<IntegerMatrix>& spans, int d);

}  // namespace torunits
