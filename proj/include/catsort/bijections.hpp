#pragma once

// Bijections between pattern-restricted uniquely sorted permutations and
// interval families: the descent-profile pair map onto Stanley intervals
// (with its cell-matrix inverse), the Tamari composite, the two routes to
// noncrossing partition intervals, the Pallo-counting decomposition, the
// parking-function map, and the antichain restrictions.

#include <cstdint>
#include <string>
#include <vector>

#include "catsort/dyck.hpp"
#include "catsort/noncross.hpp"
#include "catsort/perm.hpp"
#include "catsort/sliding.hpp"

namespace catsort {

/// k x k nonnegative matrix whose cell counts pin down a 312-avoiding
/// uniquely sorted permutation: zero above the staircase (m_ij = 0 for
/// j <= k - i) and no lower 2x2 submatrix with both off-corners positive.
struct CellMatrix {
    int k = 0;
    std::vector<std::int64_t> m;  // row-major

    std::int64_t at(int i, int j) const { return m[static_cast<std::size_t>((i - 1) * k + (j - 1))]; }
    std::int64_t& at(int i, int j) { return m[static_cast<std::size_t>((i - 1) * k + (j - 1))]; }
    bool operator==(const CellMatrix&) const = default;
};

/// Descent word of p paired with the descent word of its rotation; lands
/// in the Stanley order. Requires p in U_{2k+1}(312).
DyckInterval dl_forward(const Perm& p);

/// Cell counts of the plot of p against its left-to-right maxima grid.
CellMatrix cell_matrix(const Perm& p);

/// The unique matrix with row sums a reversed, column sums b, staircase
/// support, and the 2x2 corner condition. Throws if the margin
/// hypotheses (equal totals, suffix dominance) fail.
CellMatrix solve_cell_matrix(const std::vector<int>& a, const std::vector<int>& b);

/// Staircase support + margins + corner condition, checked directly.
bool cell_matrix_properties_hold(const CellMatrix& m, const std::vector<int>& a,
                                 const std::vector<int>& b);

/// Rebuilds the permutation from a Stanley interval via the cell matrix.
Perm dl_inverse(const DyckInterval& iv);

/// dl_forward after the left slide; lands in the Tamari order. Requires
/// p in U_{2k+1}(132).
DyckInterval tamari_forward(const Perm& p);
Perm tamari_inverse(const DyckInterval& iv);

/// Noncrossing-partition interval read directly off the plot: partners
/// that stack diagonally merge in rho; northeast endpoints stacking onto
/// partners additionally merge in kappa. Requires p in U_{2k+1}(312,1342).
NCInterval nc_interval_direct(const Perm& p);

/// The same interval obtained by replaying p's generation path through
/// the noncrossing succession operations.
NCInterval nc_interval_tree(const Perm& p);

/// One step of the counting decomposition of U(231,4132): a "nice"
/// permutation (hook from position 1 into the last point) splits into a
/// shorter class member and a uniquely sorted 132/231-avoider; otherwise
/// the permutation splits at the hook bottom into a class member and a
/// nice class member.
struct PalloSplit {
    bool nice = false;
    Perm head;  // class member (nice: the normalized remainder; else the prefix + join point)
    Perm tail;  // nice: the extracted 132/231-avoider; else the nice suffix
    bool operator==(const PalloSplit&) const = default;
};

PalloSplit pallo_split(const Perm& p);
Perm pallo_unsplit(const PalloSplit& s);

/// Even positions shifted to a nondecreasing parking function. Requires
/// p in U_{2k+1}(321).
std::vector<int> parking_from_perm(const Perm& p);
Perm perm_from_parking(const std::vector<int>& a);
bool is_nondecreasing_parking(const std::vector<int>& a);

enum class AntichainRoute { layered, via_left_slide, via_down_slide };

/// Restrictions landing on equal-component (antichain) intervals:
/// layered = dl on U(231,312); via_left_slide = dl after the left slide
/// on U(132,231); via_down_slide = dl after the down slide on U(132,312).
DyckInterval antichain_map(const Perm& p, AntichainRoute route);

/// Direct sum of decreasing runs; equivalently avoids 231 and 312.
bool is_layered(const Perm& p);

/// For p in Av_{2k+1}(132,231) written as a decreasing run, then 1, then
/// an increasing run: letter l is 'U' iff value 2k+2-l lies in the
/// increasing tail. p is uniquely sorted iff the word is a Dyck path.
std::string updown_word(const Perm& p);

}  // namespace catsort
