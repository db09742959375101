#pragma once

// Exact rational linear algebra on small (rank-sized) vectors and matrices.
// All root/weight bookkeeping is done in these types so that the model
// invariants can be checked without floating point.

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace symheat {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

double to_double(const Rat& q);
std::string to_string(const Rat& q);

RatVec rat_zero(std::size_t n);
RatVec rat_add(const RatVec& a, const RatVec& b);
RatVec rat_sub(const RatVec& a, const RatVec& b);
RatVec rat_scale(const Rat& c, const RatVec& a);
bool rat_is_zero(const RatVec& a);

/// a^T * gram * b. Throws std::invalid_argument on dimension mismatch.
Rat gram_inner(const RatMat& gram, const RatVec& a, const RatVec& b);

/// Solve A x = b by exact Gaussian elimination. A must be square and
/// nonsingular.
RatVec solve_linear(RatMat a, RatVec b);

/// Gram-Schmidt over Q, starting from the abstract Gram matrix `pairings`
/// of a list of vectors v_1..v_n. Produces the coordinates of each v_i in
/// the resulting orthogonal basis (rows of `coords`) together with the
/// squared lengths `diag` of the basis vectors. Throws
/// std::invalid_argument if `pairings` is not symmetric positive definite
/// (diag would acquire a nonpositive entry).
struct OrthogonalBasis {
  RatMat coords;
  RatVec diag;
};
OrthogonalBasis gram_schmidt(const RatMat& pairings);

}  // namespace symheat
