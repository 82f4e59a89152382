#pragma once

// Sequence computation over uniquely sorted avoidance classes and the
// versioned CSV reference files the verify suite compares against.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catsort/perm.hpp"

namespace catsort {

struct SequenceRecord {
    std::string klass;  // pattern-set text, e.g. "231;4123"
    int k = 0;
    std::uint64_t count = 0;
    std::string provenance;  // "enumerated" for freshly computed values
    bool operator==(const SequenceRecord&) const = default;
};

/// |U_{2k+1}(pats)| for k = 0..max_k. The default guard is 5 with no
/// patterns and 6 otherwise; guard_override raises it.
std::vector<SequenceRecord> compute_sequence(std::span<const Perm> pats, int max_k,
                                             std::optional<int> guard_override = std::nullopt);

/// CSV with a provenance header comment; columns class,k,count,provenance.
void write_sequence_csv(const std::string& path, std::span<const SequenceRecord> records);
std::vector<SequenceRecord> read_sequence_csv(const std::string& path);

/// Directory holding the reference CSVs; the built-in default points at
/// the source tree and can be overridden.
std::string default_data_dir();

/// Reference file name for a pattern class, e.g. "u_231_4123.csv".
std::string sequence_file_name(std::span<const Perm> pats);

}  // namespace catsort
