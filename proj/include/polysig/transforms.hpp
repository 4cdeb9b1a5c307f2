#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "polysig/areaform.hpp"
#include "polysig/curvature.hpp"
#include "polysig/polyspace.hpp"

namespace polysig {

// kappa with entries i and i+1 swapped (i is 1-based, 1 <= i <= n-1).
CurvatureData transposed(const CurvatureData& kappa, int i);

// The cut-and-glue map realizing the adjacent transposition (i, i+1): cut
// along the diagonal [z_{2i}, z_{2i+3}], rotate the wedge by -kappa_i about
// z_{2i} and reattach. Coordinates (1-based, a = e^{-i kappa_i}):
//   z'_{2i}   = z_{2i} + a (z_{2i+2} - z_{2i})
//   z'_{2i+1} = z_{2i} + a (z_{2i+3} - z_{2i})   (2i+3 wraps to 1 at i = n-1)
//   z'_{2i+2} = z_{2i},   all other coordinates unchanged.
// Maps members of the kappa-space to members of the transposed-space and
// preserves the area pairing.
PolygonVector cut_glue(const CurvatureData& kappa, int i, const PolygonVector& z);

// Inverse of cut_glue(kappa, i, .): the reverse gluing, rotating by
// +kappa_i about the relocated cone point. Takes a member of the
// transposed-space back to the kappa-space.
PolygonVector cut_glue_inverse(const CurvatureData& kappa, int i, const PolygonVector& w);

// 2n x 2n matrix form of a member-to-member linear map.
struct LinearMapMatrix {
  Eigen::MatrixXcd matrix;
  std::vector<Angle> source_kappa;
  std::vector<Angle> target_kappa;
};

LinearMapMatrix cut_glue_matrix(const CurvatureData& kappa, int i);
LinearMapMatrix cut_glue_inverse_matrix(const CurvatureData& kappa, int i);

// (2pi - kappa_n, ..., 2pi - kappa_1).
CurvatureData reversed_tuple(const CurvatureData& kappa);

// z -> (0, z_{2n}, z_{2n-1}, ..., z_2), an anti-isometry onto the space of
// the reversed tuple: <Rz, Rz> = -<z, z>.
PolygonVector reverse(const CurvatureData& kappa, const PolygonVector& z);

// The unique member of the form X = (0, -1, -1+e^{i kappa_1}, x, 0, ..., 0),
//   x = (e^{i(kappa_1+kappa_2)} - e^{i kappa_2}) / (e^{i kappa_2} - 1).
// X is orthogonal to the subspace {z : z_2 = z_4}. Requires n > 2 and
// kappa_1 + kappa_2 not a multiple of 2pi.
PolygonVector special_X(std::span<const Angle> angles);
PolygonVector special_X(const CurvatureData& kappa);
PolygonVector special_X(const GeneralizedCurvatureData& kappa);

// (kappa_1 + kappa_2, kappa_3, ..., kappa_n); the first entry may leave
// (0, 2pi). Requires kappa_1 + kappa_2 not a multiple of 2pi.
GeneralizedCurvatureData merged_tuple(std::span<const Angle> angles);
GeneralizedCurvatureData merged_tuple(const CurvatureData& kappa);

// Isometric embedding of the merged-tuple space onto {z : z_2 = z_4}:
//   w -> (0, w_2, w_2 (1 - e^{i kappa_1}), w_2, w_3, ..., w_{2n-2}).
PolygonVector embed_merged(const CurvatureData& kappa, const PolygonVector& w);
PolygonVector embed_merged(std::span<const Angle> angles, const PolygonVector& w);

// Signature by structural recursion: split off a pair whose sum is not a
// multiple of 2pi, recurse on the merged tuple, and sum the two-angle
// closed forms at the leaves. Agrees with closed_form_signature.
Signature recursive_signature(const CurvatureData& kappa);

// Signature for the all-pi tuple of length n: (k, k) for n = 2k+1 and
// (k-1, k-1) for n = 2k.
Signature allpi_signature(int n);

}  // namespace polysig
