#ifndef BCC_FAMILIES_HPP
#define BCC_FAMILIES_HPP

#include "bcc/configuration.hpp"

namespace bcc::families {

/// Four vertices on a square-with-pendant graph: polygons V1={1,3},
/// V2={2,3}, V3={1,2}, V4={1,4}, all multiplicities 1.
BrauerConfig square();

/// Cycle with m edges and multiplicity N at every vertex; cycle(1, N) is
/// self_loop(N).
BrauerConfig cycle(int m, int N);

/// One vertex of multiplicity N on the single polygon {1,1}; the quiver is a
/// pair of loops.
BrauerConfig self_loop(int N);

/// One vertex occurring five times in each of two polygons (valency 10).
BrauerConfig two_five();

/// Single 2-gon {a,t} with mult(a)=2 and t truncated; the algebra is
/// K[x]/(x^3).
BrauerConfig two_gon();

}  // namespace bcc::families

#endif
