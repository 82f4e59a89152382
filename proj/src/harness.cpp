#include "catsort/harness.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "catsort/stacksort.hpp"
#include "catsort/textio.hpp"

#ifndef CATSORT_DEFAULT_DATA_DIR
#define CATSORT_DEFAULT_DATA_DIR "data"
#endif

namespace catsort {

std::vector<SequenceRecord> compute_sequence(std::span<const Perm> pats, int max_k,
                                             std::optional<int> guard_override) {
    if (max_k < 0) throw std::invalid_argument("compute_sequence: max_k must be >= 0");
    const int guard = guard_override.value_or(sequence_guard_k(pats));
    if (max_k > guard)
        throw guard_error("sequence computation for this class is guarded at k <= " +
                          std::to_string(guard) + " (got k = " + std::to_string(max_k) +
                          "); raise the limit to proceed");
    const std::string klass = format_pattern_set(pats);
    std::vector<SequenceRecord> out;
    for (int k = 0; k <= max_k; ++k) {
        // The per-k guard is the already-validated max_k.
        const std::uint64_t c = count_uniquely_sorted(k, pats, std::max(guard, k));
        out.push_back(SequenceRecord{klass, k, c, "enumerated"});
    }
    return out;
}

void write_sequence_csv(const std::string& path, std::span<const SequenceRecord> records) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_sequence_csv: cannot open " + path);
    f << "# reference counts enumerated by catsort; regenerate with:\n";
    if (!records.empty())
        f << "#   catsort sequence --pats \"" << records.front().klass << "\" --max-k "
          << records.back().k << " --write-ref <file>\n";
    f << "class,k,count,provenance\n";
    for (const SequenceRecord& r : records)
        f << r.klass << ',' << r.k << ',' << r.count << ',' << r.provenance << '\n';
}

std::vector<SequenceRecord> read_sequence_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_sequence_csv: cannot open " + path);
    std::vector<SequenceRecord> out;
    std::string line;
    bool saw_header = false;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {  // column header
            saw_header = true;
            continue;
        }
        std::istringstream ls(line);
        SequenceRecord r;
        std::string kf, cf;
        if (!std::getline(ls, r.klass, ',')) continue;
        if (!std::getline(ls, kf, ',')) continue;
        if (!std::getline(ls, cf, ',')) continue;
        std::getline(ls, r.provenance, ',');
        r.k = std::stoi(kf);
        r.count = std::stoull(cf);
        out.push_back(std::move(r));
    }
    return out;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("CATSORT_DATA")) return env;
    return CATSORT_DEFAULT_DATA_DIR;
}

std::string sequence_file_name(std::span<const Perm> pats) {
    std::string name = "u";
    for (const Perm& p : pats) {
        name += '_';
        for (int i = 1; i <= p.size(); ++i) name += std::to_string(p.at(i));
    }
    name += ".csv";
    return name;
}

}  // namespace catsort
