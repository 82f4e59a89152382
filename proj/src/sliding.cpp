#include "catsort/sliding.hpp"

#include <algorithm>

namespace catsort {

std::optional<SlideOp> parse_slide_op(std::string_view token) {
    if (token == "swu") return SlideOp::up;
    if (token == "swd") return SlideOp::down;
    if (token == "swl") return SlideOp::left;
    if (token == "swr") return SlideOp::right;
    return std::nullopt;
}

std::string_view slide_op_token(SlideOp op) {
    switch (op) {
        case SlideOp::up: return "swu";
        case SlideOp::down: return "swd";
        case SlideOp::left: return "swl";
        case SlideOp::right: return "swr";
    }
    return "";
}

namespace {

// Up-slide at index i on a normalized permutation. Entries with value >= i
// are fixed; entries below i are renumbered by which side of the entry
// with value i they lie on: the m-th smallest on the right becomes m, the
// m-th largest on the left becomes i - m.
Perm slide_up_indexed(const Perm& p, int i) {
    const auto& v = p.entries();
    const int n = p.size();
    int pos_i = 0;
    for (int j = 1; j <= n; ++j)
        if (v[static_cast<std::size_t>(j - 1)] == i) { pos_i = j; break; }
    std::vector<int> left, right;  // values below i, by side of pos_i
    for (int j = 1; j <= n; ++j) {
        const int x = v[static_cast<std::size_t>(j - 1)];
        if (x >= i) continue;
        (j < pos_i ? left : right).push_back(x);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    std::vector<int> out(v);
    for (int j = 1; j <= n; ++j) {
        const int x = v[static_cast<std::size_t>(j - 1)];
        if (x >= i) continue;
        if (j < pos_i) {
            const auto it = std::lower_bound(left.begin(), left.end(), x);
            const int m = static_cast<int>(left.end() - it);  // m-th largest
            out[static_cast<std::size_t>(j - 1)] = i - m;
        } else {
            const auto it = std::lower_bound(right.begin(), right.end(), x);
            const int m = static_cast<int>(it - right.begin()) + 1;  // m-th smallest
            out[static_cast<std::size_t>(j - 1)] = m;
        }
    }
    return Perm(std::move(out));
}

Perm slide_normalized(const Perm& p, SlideOp op, int i) {
    switch (op) {
        case SlideOp::up: return slide_up_indexed(p, i);
        case SlideOp::down: return reversed(slide_up_indexed(reversed(p), i));
        case SlideOp::left: return rotated_inv(slide_up_indexed(rotated(p), i));
        case SlideOp::right: return rotated_inv(reversed(slide_up_indexed(reversed(rotated(p)), i)));
    }
    throw std::logic_error("slide: bad op");
}

// Restore the original value alphabet after acting on the normalization.
Perm unnormalize_like(const Perm& normalized, const Perm& original) {
    std::vector<int> sorted_vals = original.entries();
    std::sort(sorted_vals.begin(), sorted_vals.end());
    std::vector<int> out;
    out.reserve(sorted_vals.size());
    for (int r : normalized.entries()) out.push_back(sorted_vals[static_cast<std::size_t>(r - 1)]);
    return Perm(std::move(out));
}

}  // namespace

Perm slide_indexed(const Perm& p, SlideOp op, int i) {
    const int n = p.size();
    if (i < 1 || i > n) throw std::out_of_range("slide_indexed: index out of range");
    if (p.is_normalized()) return slide_normalized(p, op, i);
    return unnormalize_like(slide_normalized(normalize(p), op, i), p);
}

Perm slide(const Perm& p, SlideOp op) {
    const int n = p.size();
    if (n == 0) return p;
    if (!p.is_normalized()) return unnormalize_like(slide(normalize(p), op), p);
    Perm q = p;
    for (int i = n; i >= 1; --i) q = slide_normalized(q, op, i);
    return q;
}

Perm slide_up_recursive(const Perm& p) {
    if (p.size() <= 1) return p;
    Perm q = p.is_normalized() ? p : normalize(p);
    const auto& v = q.entries();
    const int n = q.size();
    int pos_n = 0;
    for (int j = 1; j <= n; ++j)
        if (v[static_cast<std::size_t>(j - 1)] == n) { pos_n = j; break; }
    std::vector<int> lw(v.begin(), v.begin() + (pos_n - 1));
    std::vector<int> rw(v.begin() + pos_n, v.end());
    const Perm left = lw.empty() ? Perm() : normalize(Perm(lw));
    const Perm right = rw.empty() ? Perm() : normalize(Perm(rw));
    const Perm res = skew_sum(direct_sum(slide_up_recursive(left), Perm::identity(1)),
                              slide_up_recursive(right));
    return p.is_normalized() ? res : unnormalize_like(res, p);
}

}  // namespace catsort
