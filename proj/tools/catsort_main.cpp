// catsort: stack-sorting, uniquely sorted permutations, and Catalan poset
// intervals from the command line.
//
// Exit codes: 0 success / all checks pass, 1 a verify check failed,
// 2 usage or guard error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "catsort/bijections.hpp"
#include "catsort/dyck.hpp"
#include "catsort/formulas.hpp"
#include "catsort/gentree.hpp"
#include "catsort/harness.hpp"
#include "catsort/noncross.hpp"
#include "catsort/perm.hpp"
#include "catsort/sliding.hpp"
#include "catsort/stacksort.hpp"
#include "catsort/textio.hpp"
#include "catsort/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;
using namespace catsort;

enum class Format { text, json_fmt, csv };

struct GlobalOpts {
    Format format = Format::text;
    std::optional<int> limit;
    int parallel = 0;
    std::string data_dir;
};

struct Record {
    std::string input;
    std::string operation;
    std::string output;
    std::optional<int> k;
    std::optional<std::uint64_t> count;
};

void emit(const GlobalOpts& g, const std::vector<Record>& records) {
    switch (g.format) {
        case Format::text:
            for (const Record& r : records) std::cout << r.output << '\n';
            break;
        case Format::json_fmt:
            for (const Record& r : records) {
                json j;
                j["input"] = r.input;
                j["operation"] = r.operation;
                j["output"] = r.output;
                if (r.k) j["k"] = *r.k;
                if (r.count) j["count"] = *r.count;
                std::cout << j.dump() << '\n';
            }
            break;
        case Format::csv:
            std::cout << "input,operation,output,k,count\n";
            for (const Record& r : records) {
                std::cout << r.input << ',' << r.operation << ',' << r.output << ',';
                if (r.k) std::cout << *r.k;
                std::cout << ',';
                if (r.count) std::cout << *r.count;
                std::cout << '\n';
            }
            break;
    }
}

Perm need_perm(const std::string& text) {
    auto p = parse_perm(text);
    if (!p) throw CLI::ValidationError("--perm", "cannot parse permutation '" + text + "'");
    return *p;
}

std::vector<Perm> need_pats(const std::string& text) {
    auto pats = parse_pattern_set(text);
    if (!pats) throw CLI::ValidationError("--pats", "cannot parse pattern set '" + text + "'");
    return *pats;
}

int guard_or(const GlobalOpts& g, int fallback) { return g.limit.value_or(fallback); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stack-sorting, uniquely sorted permutations, and Catalan poset intervals"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::string format_name = "text";
    app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    int limit_flag = -1;
    app.add_option("--limit", limit_flag, "raise the resource guard for the invoked operation");
    app.add_option("--parallel", g.parallel, "number of worker threads (0 = library default)");
    app.add_option("--data-dir", g.data_dir, "directory of sequence reference files");

    // ----- sort
    auto* c_sort = app.add_subcommand("sort", "apply one stack-sorting pass");
    std::string sort_perm;
    c_sort->add_option("--perm", sort_perm, "permutation")->required();

    // ----- fertility
    auto* c_fert = app.add_subcommand("fertility", "count preimages under the stack-sorting map");
    std::string fert_perm, fert_method = "census";
    c_fert->add_option("--perm", fert_perm, "permutation")->required();
    c_fert->add_option("--method", fert_method, "brute or census")->check(CLI::IsMember({"brute", "census"}));

    // ----- chc
    auto* c_chc = app.add_subcommand("chc", "canonical hook configuration, or 'none'");
    std::string chc_perm;
    c_chc->add_option("--perm", chc_perm, "permutation")->required();

    // ----- slide
    auto* c_slide = app.add_subcommand("slide", "apply a sliding operator");
    std::string slide_perm, slide_opname;
    int slide_index = 0;
    c_slide->add_option("--op", slide_opname, "swu, swd, swl, or swr")->required();
    c_slide->add_option("--index", slide_index, "apply only the indexed slide at this value/position");
    c_slide->add_option("--perm", slide_perm, "permutation")->required();

    // ----- avoiders
    auto* c_av = app.add_subcommand("avoiders", "enumerate or count pattern avoiders");
    int av_n = 0;
    std::string av_pats;
    bool av_count_only = false;
    c_av->add_option("--n", av_n, "length")->required();
    c_av->add_option("--pats", av_pats, "patterns, e.g. \"231;4123\"");
    c_av->add_flag("--count-only", av_count_only, "print the count instead of the list");

    // ----- unique
    auto* c_uni = app.add_subcommand("unique", "enumerate or count uniquely sorted permutations");
    int uni_k = 0;
    std::string uni_pats;
    bool uni_count_only = false;
    c_uni->add_option("--k", uni_k, "semisize; the length is 2k+1")->required();
    c_uni->add_option("--pats", uni_pats, "patterns to avoid");
    c_uni->add_flag("--count-only", uni_count_only, "print the count instead of the list");

    // ----- intervals
    auto* c_int = app.add_subcommand("intervals", "count (or list) poset intervals");
    int int_k = 0;
    std::string int_kind;
    bool int_list = false;
    c_int->add_option("--k", int_k, "semilength / ground size")->required();
    c_int->add_option("--kind", int_kind, "stanley, tamari, kreweras, pallo, or antichain")->required();
    c_int->add_flag("--list", int_list, "list the intervals");

    // ----- bijection
    auto* c_bij = app.add_subcommand("bijection", "apply a named bijection");
    std::string bij_name, bij_perm, bij_interval, bij_parking;
    bool bij_inverse = false;
    c_bij->add_option("--name", bij_name,
                      "dl, tamari, nc-direct, nc-tree, parking, pallo, anti-layered, anti-left, anti-down")
        ->required();
    c_bij->add_option("--perm", bij_perm, "input permutation (forward direction)");
    c_bij->add_option("--interval", bij_interval, "input interval 'lower;upper' (with --inverse)");
    c_bij->add_option("--parking", bij_parking, "input parking function '1,1,2' (with --inverse)");
    c_bij->add_flag("--inverse", bij_inverse, "apply the inverse map where defined");

    // ----- sequence
    auto* c_seq = app.add_subcommand("sequence", "count a uniquely sorted avoidance class by k");
    std::string seq_pats, seq_write, seq_check;
    int seq_maxk = 5;
    c_seq->add_option("--pats", seq_pats, "patterns defining the class");
    c_seq->add_option("--max-k", seq_maxk, "largest k to compute");
    c_seq->add_option("--write-ref", seq_write, "write the counts to a reference CSV");
    c_seq->add_option("--check-ref", seq_check, "compare the counts against a reference CSV");

    // ----- series
    auto* c_ser = app.add_subcommand("series", "exact power series coefficients");
    std::string ser_which = "C";
    int ser_order = 10;
    c_ser->add_option("--which", ser_which, "C or CofxC")->check(CLI::IsMember({"C", "CofxC"}));
    c_ser->add_option("--order", ser_order, "highest coefficient order");

    // ----- verify
    auto* c_ver = app.add_subcommand("verify", "run a reproducible invariant suite");
    std::string ver_suite;
    int ver_maxk = -1;
    c_ver->add_option("--suite", ver_suite, "lemmas, posets, bijections, sequences, or all")->required();
    c_ver->add_option("--max-k", ver_maxk, "size bound (suite default if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (format_name == "json") g.format = Format::json_fmt;
    if (format_name == "csv") g.format = Format::csv;
    if (limit_flag >= 0) g.limit = limit_flag;
    if (!g.limit) {
        if (const char* env = std::getenv("CATSORT_LIMIT")) {
            try {
                g.limit = std::stoi(env);
            } catch (...) {
                std::cerr << "catsort: ignoring malformed CATSORT_LIMIT\n";
            }
        }
    }
#ifdef _OPENMP
    if (g.parallel > 0) omp_set_num_threads(g.parallel);
#endif

    try {
        if (*c_sort) {
            const Perm p = need_perm(sort_perm);
            emit(g, {{sort_perm, "sort", format_perm(stack_sort(p)), std::nullopt, std::nullopt}});
        } else if (*c_fert) {
            const Perm p = need_perm(fert_perm);
            const auto method = fert_method == "brute" ? FertilityMethod::brute : FertilityMethod::census;
            const std::uint64_t f = fertility(p, method, guard_or(g, kFertilityGuardN));
            emit(g, {{fert_perm, "fertility", std::to_string(f), std::nullopt, f}});
        } else if (*c_chc) {
            const Perm p = need_perm(chc_perm);
            const auto cfg = canonical_hooks(p);
            std::string text = "none";
            if (cfg) {
                text.clear();
                for (const Hook& h : cfg->hooks) {
                    if (!text.empty()) text += ' ';
                    text += "(" + std::to_string(h.sw) + "," + std::to_string(p.at(h.sw)) + ")->(" +
                            std::to_string(h.ne) + "," + std::to_string(p.at(h.ne)) + ")";
                }
                if (text.empty()) text = "empty";
            }
            emit(g, {{chc_perm, "chc", text, std::nullopt, std::nullopt}});
        } else if (*c_slide) {
            const Perm p = need_perm(slide_perm);
            const auto op = parse_slide_op(slide_opname);
            if (!op) throw CLI::ValidationError("--op", "expected swu, swd, swl, or swr");
            const Perm q = c_slide->count("--index") ? slide_indexed(p, *op, slide_index) : slide(p, *op);
            emit(g, {{slide_perm, "slide " + slide_opname, format_perm(q), std::nullopt, std::nullopt}});
        } else if (*c_av) {
            const auto pats = need_pats(av_pats);
            if (av_count_only) {
                const std::uint64_t c = count_avoiders(av_n, pats);
                emit(g, {{av_pats, "avoiders", std::to_string(c), std::nullopt, c}});
            } else {
                std::vector<Record> recs;
                for_each_avoider(av_n, std::span<const Perm>(pats),
                                 [&](const Perm& p) { recs.push_back({av_pats, "avoiders", format_perm(p), std::nullopt, std::nullopt}); });
                emit(g, recs);
            }
        } else if (*c_uni) {
            const auto pats = need_pats(uni_pats);
            const int guard = guard_or(g, kUniqueEnumGuardK);
            if (uni_count_only) {
                const std::uint64_t c = count_uniquely_sorted(uni_k, pats, guard);
                emit(g, {{uni_pats, "unique", std::to_string(c), uni_k, c}});
            } else {
                std::vector<Record> recs;
                for_each_uniquely_sorted(uni_k, std::span<const Perm>(pats),
                                         [&](const Perm& p) { recs.push_back({uni_pats, "unique", format_perm(p), uni_k, std::nullopt}); },
                                         guard);
                emit(g, recs);
            }
        } else if (*c_int) {
            const int guard = guard_or(g, kIntervalScanGuardK);
            if (int_kind == "kreweras") {
                if (int_list) {
                    std::vector<Record> recs;
                    for (const NCInterval& iv : all_nc_intervals(int_k))
                        recs.push_back({"", "intervals kreweras", format_nc_interval(iv), int_k, std::nullopt});
                    emit(g, recs);
                } else {
                    const std::uint64_t c = count_nc_intervals(int_k, guard);
                    emit(g, {{"", "intervals kreweras", std::to_string(c), int_k, c}});
                }
            } else {
                const auto kind = parse_poset_kind(int_kind);
                if (!kind) throw CLI::ValidationError("--kind", "expected stanley, tamari, kreweras, pallo, or antichain");
                if (int_list) {
                    std::vector<Record> recs;
                    const auto paths = all_paths(int_k);
                    for (const auto& lo : paths)
                        for (const auto& hi : paths)
                            if (dyck_leq(lo, hi, *kind))
                                recs.push_back({"", "intervals " + int_kind,
                                                format_path_interval(DyckInterval{lo, hi, *kind}), int_k, std::nullopt});
                    emit(g, recs);
                } else {
                    const std::uint64_t c = count_intervals(int_k, *kind, guard);
                    emit(g, {{"", "intervals " + int_kind, std::to_string(c), int_k, c}});
                }
            }
        } else if (*c_bij) {
            std::string outtext;
            std::string intext;
            if (!bij_inverse) {
                const Perm p = need_perm(bij_perm);
                intext = bij_perm;
                if (bij_name == "dl")
                    outtext = format_path_interval(dl_forward(p));
                else if (bij_name == "tamari")
                    outtext = format_path_interval(tamari_forward(p));
                else if (bij_name == "nc-direct")
                    outtext = format_nc_interval(nc_interval_direct(p));
                else if (bij_name == "nc-tree")
                    outtext = format_nc_interval(nc_interval_tree(p));
                else if (bij_name == "parking")
                    outtext = format_parking(parking_from_perm(p));
                else if (bij_name == "pallo") {
                    const PalloSplit s = pallo_split(p);
                    outtext = std::string(s.nice ? "nice" : "chain") + " head=" + format_perm(s.head) +
                              " tail=" + format_perm(s.tail);
                } else if (bij_name == "anti-layered")
                    outtext = format_path_interval(antichain_map(p, AntichainRoute::layered));
                else if (bij_name == "anti-left")
                    outtext = format_path_interval(antichain_map(p, AntichainRoute::via_left_slide));
                else if (bij_name == "anti-down")
                    outtext = format_path_interval(antichain_map(p, AntichainRoute::via_down_slide));
                else
                    throw CLI::ValidationError("--name", "unknown bijection '" + bij_name + "'");
            } else {
                if (bij_name == "dl" || bij_name == "tamari") {
                    const auto kind = bij_name == "dl" ? PosetKind::stanley : PosetKind::tamari;
                    const auto iv = parse_path_interval(bij_interval, kind);
                    if (!iv) throw CLI::ValidationError("--interval", "cannot parse 'lower;upper'");
                    intext = bij_interval;
                    outtext = format_perm(bij_name == "dl" ? dl_inverse(*iv) : tamari_inverse(*iv));
                } else if (bij_name == "parking") {
                    std::vector<int> a;
                    std::string cur;
                    for (char ch : bij_parking + ",") {
                        if (ch == ',') {
                            if (!cur.empty()) a.push_back(std::stoi(cur));
                            cur.clear();
                        } else {
                            cur.push_back(ch);
                        }
                    }
                    intext = bij_parking;
                    outtext = format_perm(perm_from_parking(a));
                } else {
                    throw CLI::ValidationError("--inverse", "no inverse defined for '" + bij_name + "'");
                }
            }
            emit(g, {{intext, "bijection " + bij_name + (bij_inverse ? " inverse" : ""), outtext,
                      std::nullopt, std::nullopt}});
        } else if (*c_seq) {
            const auto pats = need_pats(seq_pats);
            const auto recs = compute_sequence(pats, seq_maxk,
                                               g.limit ? std::optional<int>(*g.limit) : std::nullopt);
            if (!seq_write.empty()) write_sequence_csv(seq_write, recs);
            if (!seq_check.empty()) {
                const auto saved = read_sequence_csv(seq_check);
                for (const auto& r : saved) {
                    if (r.k > seq_maxk) continue;
                    if (recs[static_cast<std::size_t>(r.k)].count != r.count) {
                        std::cerr << "drift against " << seq_check << " at k = " << r.k << ": computed "
                                  << recs[static_cast<std::size_t>(r.k)].count << ", saved " << r.count << "\n";
                        return 1;
                    }
                }
            }
            if (g.format == Format::csv) {
                std::cout << "class,k,count,provenance\n";
                for (const auto& r : recs)
                    std::cout << r.klass << ',' << r.k << ',' << r.count << ',' << r.provenance << '\n';
            } else {
                std::vector<Record> out;
                for (const auto& r : recs)
                    out.push_back({r.klass, "sequence", std::to_string(r.count), r.k, r.count});
                emit(g, out);
            }
        } else if (*c_ser) {
            const auto coeffs = ser_which == "C" ? catalan_series(ser_order) : catalan_of_x_catalan(ser_order);
            std::vector<Record> out;
            for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
                out.push_back({ser_which, "series", std::to_string(coeffs[static_cast<std::size_t>(i)]), i,
                               coeffs[static_cast<std::size_t>(i)]});
            emit(g, out);
        } else if (*c_ver) {
            VerifyOptions vo;
            vo.max_k = ver_maxk;
            vo.limit = g.limit;
            vo.data_dir = g.data_dir;
            const auto results = run_suite(ver_suite, vo);
            for (const auto& r : results) {
                std::printf("[%s] %-72s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                            r.seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
            }
            return all_passed(results) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "catsort: " << e.what() << "\n";
        return 2;
    } catch (const guard_error& e) {
        std::cerr << "catsort: " << e.what() << " (use --limit to raise the guard)\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "catsort: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "catsort: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "catsort: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
