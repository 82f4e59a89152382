#pragma once

// Indexed sliding operators on permutation plots and their full composites.
// The up-slide at index i moves the points southwest of the point with
// height i above the points southeast of it; the other three operators are
// its conjugates under reversal and rotation.

#include <optional>
#include <string_view>

#include "catsort/perm.hpp"

namespace catsort {

enum class SlideOp { up, down, left, right };

/// CLI tokens: swu, swd, swl, swr.
std::optional<SlideOp> parse_slide_op(std::string_view token);
std::string_view slide_op_token(SlideOp op);

/// Single indexed slide, 1 <= i <= n. Non-normalized input is normalized,
/// slid, and mapped back through the inverse rank map.
Perm slide_indexed(const Perm& p, SlideOp op, int i);

/// Composite over all indices, index n applied first, index 1 last.
Perm slide(const Perm& p, SlideOp op);

/// Reference route for the composite up-slide via the recursive identity
/// on LnR decompositions; kept alongside the indexed composite so the two
/// can be checked against each other.
Perm slide_up_recursive(const Perm& p);

}  // namespace catsort
