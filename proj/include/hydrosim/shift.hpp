// Copyright (c) 2026, the hydrosim authors.
// SPDX-License-Identifier: BSD-3-Clause

#pragma once

#include <vector>

#include "hydrosim/levelset.hpp"
#include "hydrosim/materials.hpp"
#include "hydrosim/topology.hpp"

namespace hydro {

// One quadrature point on an active (surrogate or cut-interior) face.
struct FaceQP {
  double w = 0.0;          // quadrature weight times surface measure
  double x[2] = {0, 0};    // physical point (same from both sides)
  double nplus[2] = {0, 0};  // unit face normal, outward from the '+' element
  double xi_p[2] = {0, 0};   // reference coords in the '+' element
  double xi_m[2] = {0, 0};   // reference coords in the '-' element
  DistSample dist;           // interface distance data at x
};

// Quadrature data for one active face.  '+' is the material-1-richer side.
struct FaceData {
  int fi = -1;
  FaceSet set = FaceSet::None;
  int ep = -1, em = -1;      // plus / minus elements
  bool cut_is_plus = false;  // surrogate faces: which side is the cut element
  std::vector<FaceQP> qps;
};

// Build quadrature data for all active faces on configuration X.  Distance
// samples are evaluated from the cut side of surrogate faces and from the
// '+' side of cut-interior faces.  invalid_normals counts points where the
// shifted-point normal had to fall back to the local gradient.
std::vector<FaceData> build_face_data(const Mesh& mesh, const LevelSet& ls,
                                      const Topology& topo,
                                      const std::vector<double>& X,
                                      int* invalid_normals = nullptr);

// Elements touching any active face (band where polynomials are fitted).
std::vector<int> band_elements(const Mesh& mesh, const Topology& topo);

}  // namespace hydro
