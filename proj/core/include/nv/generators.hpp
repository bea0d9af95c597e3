#pragma once

#include "nv/element.hpp"

namespace nv {

/// The "index d" baker's map with support below the given address, built
/// directly from its two-cell description: it halves coordinate 1 of the
/// support and stacks the halves into coordinate d.
Element baker_direct(int d, const Address& support);

/// The three-transposition product
///   <a.0_1 | b.0_d> <a.1_1 | b.1_d> <a | b>
/// which evaluates to an index-d baker's map on a composed with the inverse
/// of an index-d baker's map on b.  Requires a, b incomparable, 2 <= d <= n.
Element gen_A(int d, const Address& a, const Address& b);

/// Transposition-word form of the index-d baker's map with support below
/// support, for supports whose coordinates 1 and d are both non-empty.
/// The helper address it needs is chosen deterministically.
Element gen_Bhat(int d, const Address& support);

/// Same as gen_Bhat but with an explicit helper address; the helper must be
/// incomparable with the support minus its last coordinate-d bit and have
/// non-empty coordinates 1 and d.  Exposed so independence of the helper
/// choice can be tested.
Element gen_Bhat_with_witness(int d, const Address& support, const Address& witness);

/// Transposition-word form of the index-d baker's map with support below
/// support, for supports with non-empty coordinate 1 (coordinate d may be
/// empty).
Element gen_B(int d, const Address& support);

enum class HmKind { X, Pi, PiBar, C };

/// The Hennig-Matucci generating family: X_{m,d} (1 <= d <= n), pi_m,
/// pibar_m, and C_{m,d} (2 <= d <= n), with the level-m versions obtained
/// by inserting the prefix 0^m into coordinate 1.
Element hm_generator(HmKind kind, int m, int d, int n);

} // namespace nv
