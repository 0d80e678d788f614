// Shared test fixtures: the example multigraph from the docs and the terms
// whose statistics are frozen as oracle values.
#pragma once

#include "graycal/onecell.hpp"

namespace graycal::testfix {

// objects A..F; u:(A)->B, g:(C,D)->E, h:(B,E)->F, k:()->A
inline Multigraph example_g0() {
  Multigraph mg;
  mg.objects = {"A", "B", "C", "D", "E", "F"};
  mg.arrows = {
      {"u", {"A"}, "B"},
      {"g", {"C", "D"}, "E"},
      {"h", {"B", "E"}, "F"},
      {"k", {}, "A"},
  };
  return mg;
}

// Three colourless-by-convention wires for braid-only terms.
inline Multigraph braid3() {
  Multigraph mg;
  mg.objects = {"P", "Q", "R"};
  return mg;
}

// T1 = [()u(C,D); (B)g(); ()h()] over source (A,C,D); prefix weight 1.
inline OneCell t1() {
  OneCell f;
  f.source = {"A", "C", "D"};
  f.cells = {
      MultiarrowCell{{}, "u", {"C", "D"}},
      MultiarrowCell{{"B"}, "g", {}},
      MultiarrowCell{{}, "h", {}},
  };
  return f;
}

// The normal form of T1: [(A)g(); ()u(E); ()h()].
inline OneCell t1_nf() {
  OneCell f;
  f.source = {"A", "C", "D"};
  f.cells = {
      MultiarrowCell{{"A"}, "g", {}},
      MultiarrowCell{{}, "u", {"E"}},
      MultiarrowCell{{}, "h", {}},
  };
  return f;
}

// Overbraid fixture S = [(P) x[Q|R] (); () x[P|R] (Q)] over (P,Q,R).
inline OneCell overbraid_s() {
  OneCell f;
  f.source = {"P", "Q", "R"};
  f.cells = {
      CrossingCell{{"P"}, {"Q"}, {"R"}, {}},
      CrossingCell{{}, {"P"}, {"R"}, {"Q"}},
  };
  return f;
}

} // namespace graycal::testfix
