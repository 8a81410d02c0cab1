#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latticemed/lattice.hpp"

namespace latmed {

/// Lattice expression AST over meet, join and variables. Children lists are
/// nonempty, so no term denotes a constant.
struct LatticeTerm {
  enum class Kind { Var, Meet, Join };

  Kind kind = Kind::Var;
  int var = -1;
  std::vector<LatticeTerm> children;

  static LatticeTerm variable(int index);
  static LatticeTerm meet_of(std::vector<LatticeTerm> children);
  static LatticeTerm join_of(std::vector<LatticeTerm> children);
};

/// median(t0, t1, t2) as a join-of-meets term.
LatticeTerm median_term(LatticeTerm a, LatticeTerm b, LatticeTerm c);

/// m_k over the given argument terms: join over (n+1-k)-subsets of meets.
LatticeTerm mk_term(std::vector<LatticeTerm> args, int k);
/// Dual form: meet over k-subsets of joins.
LatticeTerm mk_term_dual(std::vector<LatticeTerm> args, int k);

/// Structural fold of a term through a carrier's operations; `binding` maps
/// variable index to element.
template <Carrier L>
typename L::Element term_eval(const LatticeTerm& t, std::span<const typename L::Element> binding,
                              const L& lat) {
  switch (t.kind) {
    case LatticeTerm::Kind::Var:
      if (t.var < 0 || static_cast<std::size_t>(t.var) >= binding.size()) {
        throw std::invalid_argument("term_eval: unbound variable #" + std::to_string(t.var));
      }
      return binding[static_cast<std::size_t>(t.var)];
    case LatticeTerm::Kind::Meet:
    case LatticeTerm::Kind::Join: {
      auto acc = term_eval(t.children.front(), binding, lat);
      for (std::size_t i = 1; i < t.children.size(); ++i) {
        auto rhs = term_eval(t.children[i], binding, lat);
        acc = (t.kind == LatticeTerm::Kind::Meet) ? lat.meet(acc, rhs) : lat.join(acc, rhs);
      }
      return acc;
    }
  }
  throw std::logic_error("term_eval: corrupt term");
}

/// Canonical antichain-of-meets form: the element of the free distributive
/// lattice a term denotes. Two terms agree on every distributive lattice iff
/// their normal forms are equal. Clauses are variable bitmasks, sorted by
/// (size, numeric value); no clause contains another.
struct MonotoneNormalForm {
  int vars = 0;
  std::vector<std::uint32_t> clauses;

  friend bool operator==(const MonotoneNormalForm&, const MonotoneNormalForm&) = default;

  std::string str() const;
};

MonotoneNormalForm term_normal_form(const LatticeTerm& t, int vars);

/// Meet/join in the free distributive lattice, directly on normal forms.
MonotoneNormalForm nf_meet(const MonotoneNormalForm& a, const MonotoneNormalForm& b);
MonotoneNormalForm nf_join(const MonotoneNormalForm& a, const MonotoneNormalForm& b);

/// Evaluates the monotone boolean function a normal form denotes.
bool nf_eval(const MonotoneNormalForm& nf, std::uint32_t assignment);

/// Number of distinct normal forms on v variables, i.e. nonconstant monotone
/// boolean functions: 1, 4, 18, 166 for v = 1..4. Enumerates truth tables;
/// v > 4 is refused.
long free_dl_count(int v);

struct SymbolicMkReport {
  struct Identity {
    std::string id;
    bool pass = true;
  };
  int n = 0;
  std::vector<Identity> identities;
  bool all_pass = true;
};

/// Normal-form identities for the order-statistic operators on n variables:
/// invariance under every permutation, agreement of the primal and dual
/// forms, and the chain m_k <= m_{k+1}.
SymbolicMkReport verify_mk_symbolic(int n);

}  // namespace latmed
