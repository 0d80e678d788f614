// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "graycal/check.hpp"

namespace graycal {

struct EqDerivation;

// Leaves carry their expressions together with the (positional) context the
// expression was elaborated against; names are kept for printing only.
template <class E> struct InCtx {
  Context ctx;
  E expr;
  std::vector<std::string> names;
};

struct DRefl {
  InCtx<Expr2> arg;
};
struct DSym {
  std::vector<EqDerivation> children; // 1
};
struct DTrans {
  std::vector<EqDerivation> children; // 2: derives psi=chi, phi=psi |- phi=chi
};
struct DEqAxiom {
  std::string name;
  std::vector<InCtx<Expr1>> args;
};
struct DCompCong {
  std::vector<EqDerivation> children; // 2
};
struct DAppCong {
  std::string symbol;
  std::vector<EqDerivation> children;
};
struct DFuncId {
  std::string symbol;
  std::vector<InCtx<Expr1>> args;
};
struct DFuncComp {
  std::string symbol;
  std::vector<InCtx<Expr2>> phis;
  std::vector<InCtx<Expr2>> psis;
};
struct DUnitL {
  InCtx<Expr2> arg;
};
struct DUnitR {
  InCtx<Expr2> arg;
};
struct DNat {
  std::string cell;
  std::vector<InCtx<Expr2>> args;
};

struct EqDerivation {
  std::variant<DRefl, DSym, DTrans, DEqAxiom, DCompCong, DAppCong, DFuncId, DFuncComp,
               DUnitL, DUnitR, DNat>
      node;
};

std::string rule_name(const EqDerivation& d);

// A derived equation sequent ctx |- lhs = rhs : src -> tgt in object.
struct EqSequent {
  Context ctx;
  std::string object;
  Expr1 src;
  Expr1 tgt;
  Expr2 lhs;
  Expr2 rhs;
};

// Validates every node against its rule schema and returns the concluded
// sequent. `extra` supplies lemma equations usable by the axiom rule in
// addition to the theory's. Throws CheckFailure with a path into the tree.
EqSequent check_eq_derivation(const Theory& t, const std::vector<EqDecl>& extra,
                              const EqDerivation& d);

struct Lemma {
  std::string name;
  std::vector<std::string> var_names; // surface names, printing only
  Context ctx;
  Expr2 lhs;
  Expr2 rhs;
  EqDerivation proof;
};

// Lemmas check in order; each accepted lemma becomes an axiom for the rest.
struct ProofScript {
  std::vector<Lemma> lemmas;
};

struct LemmaResult {
  std::string name;
  bool passed = false;
  std::string message;
};

struct ScriptReport {
  std::vector<LemmaResult> lemmas;
  bool all_passed() const {
    for (const auto& l : lemmas)
      if (!l.passed)
        return false;
    return true;
  }
};

ScriptReport check_script(const Theory& t, const ProofScript& s);

} // namespace graycal
