#pragma once

#include <cstdint>
#include <vector>

#include "bb/group_ops.hpp"
#include "bb/perm_group.hpp"

namespace bb::named {

PermGroup cyclic(std::size_t n);
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
/// Dihedral group of order 2n on n points.
PermGroup dihedral(std::size_t n);
/// Quaternion group in its regular representation on 8 points.
PermGroup quaternion();
/// SL(2,3) acting on the 8 nonzero vectors of GF(3)^2.
PermGroup sl2_3();
/// Extraspecial group of order 27 and exponent 3, regular on 27 points.
/// Generators x, y with central commutator.
PermGroup heisenberg3();
/// Elementary abelian group of order 2^k acting regularly on 2^k points.
PermGroup elementary_abelian2(std::size_t k);
/// Frobenius group C7 ⋊ C3 on 7 points: x -> x+1, x -> 2x.
PermGroup frobenius21();

/// Automorphism data for the coprime test instances.
struct NamedAction {
  PermGroup group;
  AutomorphismMaps action;
};

/// Q8 with C3 cycling i -> j -> k.
NamedAction q8_c3();
/// C7 with C3 acting by x -> x^2.
NamedAction c7_c3();
/// C7 ⋊ C3 with C2 inverting the normal C7.
NamedAction f21_c2();
/// Dihedral group of order 14 with C3 acting by c -> c^2 on the rotations.
NamedAction d14_c3();
/// 3^{1+2} with Q8 ≤ SL(2,3) acting on the Frattini quotient, trivially on the center.
NamedAction heisenberg3_q8();
/// C2^4 with C5 acting through GF(16)^* multiplication.
NamedAction c2_4_c5();
/// Trivial action on any group.
NamedAction trivial_action(const PermGroup& G);

}  // namespace bb::named
