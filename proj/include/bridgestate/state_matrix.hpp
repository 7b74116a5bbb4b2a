#pragma once

#include "bridgestate/continued_fraction.hpp"
#include "bridgestate/matrix.hpp"

namespace bridgestate {

/// Generalized Seifert matrix of a plumbed surface: half-integer diagonal
/// and a single unit between each pair of adjacent bands.
using StateMatrix = Square<Fraction>;

/// Symmetric integral matrix V + V^T of the Gordon-Litherland form.
using GLMatrix = Square<Fraction>;

/// Lower bidiagonal: (i,i) = (-1)^i n_i / 2 (0-based i), (i+1,i) = 1.
StateMatrix standard_state_matrix(const Expansion& e);

/// Reverses the normal vector of the disk joining bands i and i+1: swaps
/// entries (i,i+1) and (i+1,i). Requires 0 <= i < k-1.
StateMatrix flip_normal(const StateMatrix& v, Eigen::Index i);

/// Reverses the orientation of curve i: negates row i and column i.
StateMatrix flip_orientation(const StateMatrix& v, Eigen::Index i);

GLMatrix gl_matrix(const StateMatrix& v);

/// Checks the support pattern: tridiagonal, and for each adjacent pair
/// exactly one of (i,i+1), (i+1,i) is +-1 while the other is 0.
bool has_state_support(const StateMatrix& v);

}  // namespace bridgestate
