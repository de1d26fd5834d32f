#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>

#include "qtruth/valuation.hpp"

namespace qtruth {

/// Propositional formula over atomic projectors with connectives
/// not / and / or. Immutable tree, cheap to copy.
class Formula {
 public:
  static Formula atom(Projector p, std::string label = {});
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);

  struct Atom;
  struct Not;
  struct And;
  struct Or;
  using Node = std::variant<Atom, Not, And, Or>;

  const Node& node() const;
  Index dim_ambient() const;
  std::string to_text() const;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Atom {
  Projector projector;
  std::string label;
};
struct Formula::Not {
  Formula operand;
};
struct Formula::And {
  Formula lhs, rhs;
};
struct Formula::Or {
  Formula lhs, rhs;
};

inline const Formula::Node& Formula::node() const { return *node_; }

Formula operator!(Formula f);
Formula operator&(Formula lhs, Formula rhs);
Formula operator|(Formula lhs, Formula rhs);

/// Maps the formula into the ortholattice of subspaces: atoms to ranges,
/// not to the orthocomplement, or to join, and to meet.
Subspace represent(const Formula& f, const Tolerance& tol = {});

/// Valuates the formula by membership of psi in its representative subspace.
TruthValue evaluate(const Formula& f, const StateVector& psi,
                    Semantics sem = Semantics::Supervaluation,
                    const Tolerance& tol = {});

/// Conjunction of the two membership predicates with strong-Kleene gap
/// propagation: False dominates, Gap otherwise infects.
TruthValue meet_membership_rule(const StateVector& psi, const Formula& a,
                                const Formula& b, const Tolerance& tol = {});

struct DistributivityReport {
  TruthValue lhs_value = TruthValue::Gap;  // Q and (P or not P)
  TruthValue rhs_value = TruthValue::Gap;  // (Q and P) or (Q and not P)
  Index lhs_subspace_dim = 0;
  Index rhs_subspace_dim = 0;
  bool holds = false;
};

/// Evaluates both sides of the distributive law at psi under the total
/// quantum-logic semantics.
DistributivityReport distributivity_check(const Projector& q,
                                          const Projector& p,
                                          const StateVector& psi,
                                          const Tolerance& tol = {});

class FormulaParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the CLI formula syntax: atoms by label, `!` not, `&` and, `|` or,
/// parentheses; precedence ! > & > |, left-associative.
Formula parse_formula(const std::string& text,
                      const std::map<std::string, Projector>& atoms);

}  // namespace qtruth
