#pragma once

#include <span>
#include <string>
#include <vector>

#include "nv/element.hpp"

namespace nv {

/// Turns a permutation of the length-2 grid (given as an image array over
/// the standard enumeration indices) into the element permuting the grid
/// cells accordingly.  Throws NotABijection.
Element perm_to_element(std::span<const std::size_t> images, int n);

/// Convenience: the element swapping grid cells i and j.
Element delta_swap_element(int n, std::size_t i, std::size_t j);

/// The concrete elements seeding the three-generator presentation:
///   a  the full 4^n-cycle on the grid, in enumeration order
///   b  the transposition of the first two grid cells
///   c  the 2n-transposition product tying the grid to finer cells
///   p, q[d-1]  the cycles used to pin down centralizers
///   t  a grid transposition disjoint from everything c touches
///   x  alias of a (the two-generator scheme keeps it)
struct SpecialElements {
    int n = 0;
    std::vector<Address> delta;
    Element a, b, c, p, t, x;
    std::vector<Element> q; // q[d-1] for d = 1..n
    int c_order = 0;
};

/// Cached per arity; values are immutable and safe to share.
const SpecialElements& special_elements(int n);

/// Two-generator reduction: x = a and y = c t generate everything; the
/// witness words express a, b, c, t over {x, y} and replay to equal
/// elements.
struct TwoGeneratorScheme {
    Element x, y;
    int c_order = 0;
    std::size_t b_shift = 0; // the k with b = t^(x^k)
    std::string witness_a, witness_b, witness_c, witness_t;
};

TwoGeneratorScheme two_generator_scheme(int n);

/// Evaluates a word over the two-generator alphabet {x, y} written in the
/// usual product/power syntax, e.g. "x^-13 * y^5 * x^13".
Element eval_xy_word(std::string_view text, const Element& x, const Element& y);

} // namespace nv
