#pragma once

// The permutation side of the succession structure on uniquely sorted
// permutations avoiding 312 and 1342: skylines, conjoined points, labels,
// point splitting, and the child/parent operations.

#include <vector>

#include "catsort/perm.hpp"
#include "catsort/stacksort.hpp"

namespace catsort {

/// Chain of hooks joining position 1 to position 2k+1; points holds the
/// 1-based positions along the chain (k+1-free: size = #hooks + 1).
struct Skyline {
    std::vector<int> points;
    std::vector<Hook> hooks;
};

/// True iff p is uniquely sorted and avoids 312 and 1342.
bool in_u312_1342(const Perm& p);

/// Follows hooks from position 1 to position n. Precondition checked.
Skyline skyline(const Perm& p);

/// True iff p_q = p_{q+1} + 1; the final position is never conjoined.
bool conjoined(const Perm& p, int q);

/// 1 + #(nonconjoined skyline hooks) + #(skyline hooks); k >= 1 required.
int perm_label(const Perm& p);

/// Splits the point at pos into a vertically and horizontally adjacent
/// pair: values >= p_pos shift up, the old value reappears at pos + 1.
Perm split_point(const Perm& p, int pos);

/// The perm_label(p) children of p, each two entries longer, in the order
/// matching nc_children index-for-index.
std::vector<Perm> perm_children(const Perm& p);

/// Removes the last (highest) point and its partner, then normalizes;
/// inverse of whichever child operation produced p.
Perm perm_parent(const Perm& p);

}  // namespace catsort
