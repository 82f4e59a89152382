#pragma once

// Text formats shared by the CLI, the data files, and the tests.
//   permutation   "3,5,2,4,1"; bare digit words ("35241") accepted when
//                 every entry is a single digit
//   pattern set   patterns separated by ';' inside one value: "231;4123"
//   Dyck path     the step word itself: "UUDUUDDDUD"
//   path interval "lower;upper"
//   partition     "{1,3}{2}"
//   nc interval   "rho|kappa"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catsort/dyck.hpp"
#include "catsort/noncross.hpp"
#include "catsort/perm.hpp"

namespace catsort {

std::optional<Perm> parse_perm(std::string_view text);
std::string format_perm(const Perm& p);

std::optional<std::vector<Perm>> parse_pattern_set(std::string_view text);
std::string format_pattern_set(std::span<const Perm> pats);

std::optional<DyckInterval> parse_path_interval(std::string_view text, PosetKind kind);
std::string format_path_interval(const DyckInterval& iv);

std::optional<NCPartition> parse_nc_partition(std::string_view text);
std::string format_nc_partition(const NCPartition& p);

std::optional<NCInterval> parse_nc_interval(std::string_view text);
std::string format_nc_interval(const NCInterval& iv);

std::string format_parking(const std::vector<int>& a);

}  // namespace catsort
