#include "qtruth/logic.hpp"

namespace qtruth {

Formula Formula::atom(Projector p, std::string label) {
  return Formula(std::make_shared<Node>(Atom{std::move(p), std::move(label)}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(Not{std::move(f)}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(And{std::move(lhs), std::move(rhs)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(Or{std::move(lhs), std::move(rhs)}));
}

Index Formula::dim_ambient() const {
  if (const auto* a = std::get_if<Atom>(node_.get()))
    return a->projector.dim_ambient();
  if (const auto* n = std::get_if<Not>(node_.get()))
    return n->operand.dim_ambient();
  if (const auto* c = std::get_if<And>(node_.get()))
    return c->lhs.dim_ambient();
  return std::get<Or>(*node_).lhs.dim_ambient();
}

std::string Formula::to_text() const {
  if (const auto* a = std::get_if<Atom>(node_.get()))
    return a->label.empty() ? "<atom>" : a->label;
  if (const auto* n = std::get_if<Not>(node_.get()))
    return "!" + n->operand.to_text();
  if (const auto* c = std::get_if<And>(node_.get()))
    return "(" + c->lhs.to_text() + " & " + c->rhs.to_text() + ")";
  const auto& d = std::get<Or>(*node_);
  return "(" + d.lhs.to_text() + " | " + d.rhs.to_text() + ")";
}

Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
Formula operator&(Formula lhs, Formula rhs) {
  return Formula::conjunction(std::move(lhs), std::move(rhs));
}
Formula operator|(Formula lhs, Formula rhs) {
  return Formula::disjunction(std::move(lhs), std::move(rhs));
}

Subspace represent(const Formula& f, const Tolerance& tol) {
  if (const auto* a = std::get_if<Formula::Atom>(&f.node()))
    return range_of(a->projector, tol);
  if (const auto* n = std::get_if<Formula::Not>(&f.node()))
    return ortho_complement(represent(n->operand, tol), tol);
  if (const auto* c = std::get_if<Formula::And>(&f.node())) {
    Subspace l = represent(c->lhs, tol);
    Subspace r = represent(c->rhs, tol);
    if (l.dim_ambient() != r.dim_ambient())
      throw DimensionError("represent: atoms of mixed ambient dimension");
    return meet(l, r, tol);
  }
  const auto& d = std::get<Formula::Or>(f.node());
  Subspace l = represent(d.lhs, tol);
  Subspace r = represent(d.rhs, tol);
  if (l.dim_ambient() != r.dim_ambient())
    throw DimensionError("represent: atoms of mixed ambient dimension");
  return join(l, r, tol);
}

TruthValue evaluate(const Formula& f, const StateVector& psi, Semantics sem,
                    const Tolerance& tol) {
  return valuate(psi, projector_of(represent(f, tol)), sem, tol);
}

namespace {

TruthValue kleene_and(TruthValue a, TruthValue b) {
  if (a == TruthValue::False || b == TruthValue::False) return TruthValue::False;
  if (a == TruthValue::Gap || b == TruthValue::Gap) return TruthValue::Gap;
  return TruthValue::True;
}

}  // namespace

TruthValue meet_membership_rule(const StateVector& psi, const Formula& a,
                                const Formula& b, const Tolerance& tol) {
  const TruthValue ta =
      valuate(psi, projector_of(represent(a, tol)), Semantics::Supervaluation, tol);
  const TruthValue tb =
      valuate(psi, projector_of(represent(b, tol)), Semantics::Supervaluation, tol);
  return kleene_and(ta, tb);
}

DistributivityReport distributivity_check(const Projector& q, const Projector& p,
                                          const StateVector& psi,
                                          const Tolerance& tol) {
  Formula fq = Formula::atom(q, "Q");
  Formula fp = Formula::atom(p, "P");
  Formula lhs = fq & (fp | !fp);
  Formula rhs = (fq & fp) | (fq & !fp);

  DistributivityReport rep;
  Subspace ls = represent(lhs, tol);
  Subspace rs = represent(rhs, tol);
  rep.lhs_subspace_dim = ls.dim();
  rep.rhs_subspace_dim = rs.dim();
  rep.lhs_value =
      valuate(psi, projector_of(ls), Semantics::QuantumLogicTotal, tol);
  rep.rhs_value =
      valuate(psi, projector_of(rs), Semantics::QuantumLogicTotal, tol);
  rep.holds = rep.lhs_value == rep.rhs_value;
  return rep;
}

}  // namespace qtruth
