// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <vector>

#include "hydrosim/levelset.hpp"
#include "hydrosim/mesh.hpp"

namespace hydro {

enum class ElemClass : char { Pure1, Pure2, Cut };

enum class FaceSet : char {
  None = 0,
  Surrogate1,  // cut | pure-1 neighbor
  Surrogate2,  // cut | pure-2 neighbor
  CutInterior  // the face itself crosses the interface
};

// Interface-induced mesh topology.  Because the indicator field is carried
// with constant nodal values on the moving mesh, element classes and face
// sets are fixed for the whole run; only the volume fractions change as
// elements deform.
struct Topology {
  std::vector<ElemClass> cls;
  std::vector<double> alpha0;      // material-1 volume fraction at t=0
  std::vector<FaceSet> face_set;   // per mesh.faces entry
  std::vector<char> face_plus_lo;  // '+' side of the face is the elo element
  std::vector<int> active_faces;   // faces with face_set != None

  // sub-cell midpoint lattice for volume fractions on cut elements.  Each
  // lattice cell stores the material-1 area fraction of the linearized
  // indicator, computed once in reference coordinates (the indicator's
  // reference-space zero set never changes); the time dependence enters
  // only through the Jacobian at the cell centers.
  TensorRule lat;
  std::vector<int> cut_elems;
  std::vector<int> cut_index;      // per element, -1 if not cut
  std::vector<double> frac;        // [cut][lattice cell]

  int sliver_reclassified = 0;

  void build(const Mesh& mesh, const LevelSet& ls, int lattice_points = 16);

  // current material-1 volume fraction per element on configuration X
  std::vector<double> alpha1(const Mesh& mesh,
                             const std::vector<double>& X) const;
};

}  // namespace hydro
