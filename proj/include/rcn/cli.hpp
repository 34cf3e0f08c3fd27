#ifndef RCN_CLI_HPP
#define RCN_CLI_HPP

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rcn/rcn.hpp"

// Command-line surface. Exit codes: 0 success, 2 input/validation error,
// 3 verdict failure (an identity or certification line did not hold).
// Commands buffer their stdout and emit it only on completion, so a failing
// run never leaves partial output behind.

namespace rcn::cli {

using nlohmann::json;

namespace detail {

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

inline std::string join_flags(const std::vector<bool>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += std::string(i ? " " : "") + (v[i] ? "yes" : "no");
    return s;
}

// 1-based input-file ordinals of the valid sets (degenerate ones are skipped).
inline std::vector<int> valid_ordinals(const PointFileData& d) {
    std::vector<bool> bad(d.sets.size() + d.invalid.size(), false);
    for (auto& [idx, why] : d.invalid) bad[idx] = true;
    std::vector<int> ord;
    for (size_t i = 0; i < bad.size(); ++i)
        if (!bad[i]) ord.push_back(static_cast<int>(i) + 1);
    return ord;
}

inline int report_invalid(const PointFileData& d, std::ostream& err) {
    for (auto& [idx, why] : d.invalid)
        err << "set " << idx + 1 << ": general position violated: " << why << "\n";
    return d.invalid.empty() ? 0 : 2;
}

inline PointFileData load_sets(const std::string& path, int n, int bits) {
    if (bits != 0) return read_order_type_db(path, n, bits);
    return read_point_file(path);
}

}  // namespace detail

inline int cmd_analyze(const PointFileData& data, bool structured, std::ostream& out,
                       std::ostream& err) {
    int code = detail::report_invalid(data, err);
    std::vector<int> ord = detail::valid_ordinals(data);
    for (size_t i = 0; i < data.sets.size(); ++i) {
        const PointSet& ps = data.sets[i];
        const int n = ps.n();
        EdgeVector ev = edge_vector(ps);
        std::vector<long long> cum, bound;
        std::vector<bool> tight;
        for (int k = 0; k < ev.levels(); ++k) {
            cum.push_back(cumulative(ev, k));
            bound.push_back(lower_bound_leq_k(n, k));
            tight.push_back(cum.back() == bound.back());
        }
        CrossingReport cr = crossing_report(ps);
        if (!cr.agree()) code = 3;
        if (structured) {
            json j{{"set", ord[i]},
                   {"n", n},
                   {"hull", convex_hull_size(ps)},
                   {"E", ev.counts},
                   {"E_cum", cum},
                   {"bound", bound},
                   {"tight", tight},
                   {"cr",
                    {{"brute", cr.brute},
                     {"from_edges", cr.from_edges},
                     {"from_cumulative", cr.from_cumulative},
                     {"agree", cr.agree()}}}};
            out << j.dump() << "\n";
        } else {
            out << "# set " << ord[i] << "\n";
            out << "n: " << n << "\n";
            out << "hull: " << convex_hull_size(ps) << "\n";
            out << "E: " << detail::join(ev.counts) << "\n";
            out << "E_cum: " << detail::join(cum) << "\n";
            out << "bound: " << detail::join(bound) << "\n";
            out << "tight: " << detail::join_flags(tight) << "\n";
            out << "cr: " << cr.brute << " " << cr.from_edges << " " << cr.from_cumulative
                << (cr.agree() ? " OK" : " MISMATCH") << "\n";
        }
    }
    return code;
}

inline int cmd_circseq(const PointFileData& data, bool structured, std::ostream& out,
                       std::ostream& err) {
    int code = detail::report_invalid(data, err);
    std::vector<int> ord = detail::valid_ordinals(data);
    for (size_t i = 0; i < data.sets.size(); ++i) {
        HalfPeriod hp = from_point_set(data.sets[i]);
        ValidationResult v = validate(hp);
        if (!v.ok) {
            err << "set " << ord[i] << ": constructed half-period invalid: " << v.message << "\n";
            code = 3;
            continue;
        }
        CriticalProfile prof = critical_profile(hp);
        std::vector<long long> levels(prof.counts.begin() + 1, prof.counts.end());
        if (structured) {
            json j{{"set", ord[i]},      {"n", hp.n},       {"steps", hp.steps()},
                   {"initial", hp.initial}, {"gates", hp.gates}, {"profile", levels},
                   {"halving", prof.halving()}};
            out << j.dump() << "\n";
        } else {
            out << "# set " << ord[i] << "\n";
            write_half_period(out, hp);
            out << "# profile: " << detail::join(levels) << "\n";
            out << "# halving: " << prof.halving() << "\n";
        }
    }
    return code;
}

inline int cmd_decomp(const PointFileData& data, bool structured, std::ostream& out,
                      std::ostream& err) {
    int code = detail::report_invalid(data, err);
    std::vector<int> ord = detail::valid_ordinals(data);
    for (size_t i = 0; i < data.sets.size(); ++i) {
        const PointSet& ps = data.sets[i];
        if (ps.n() % 3 != 0) {
            err << "set " << ord[i] << ": n = " << ps.n() << " is not divisible by 3\n";
            code = std::max(code, 2);
            continue;
        }
        HalfPeriod hp = from_point_set(ps);
        std::optional<ThreeDecomposition> dec = search_decomposition(hp);
        if (structured) {
            json j{{"set", ord[i]}, {"n", ps.n()}, {"decomposable", dec.has_value()}};
            if (dec) {
                j["rotation"] = dec->rotation;
                j["s"] = dec->s;
                j["t"] = dec->t;
                j["A"] = dec->A;
                j["B"] = dec->B;
                j["C"] = dec->C;
            }
            out << j.dump() << "\n";
        } else {
            out << "# set " << ord[i] << "\n";
            out << "n: " << ps.n() << "\n";
            out << "decomposable: " << (dec ? "YES" : "NO") << "\n";
            if (dec) {
                out << "rotation: " << dec->rotation << "\n";
                out << "s: " << dec->s << "\n";
                out << "t: " << dec->t << "\n";
                out << "A: " << detail::join(dec->A) << "\n";
                out << "B: " << detail::join(dec->B) << "\n";
                out << "C: " << detail::join(dec->C) << "\n";
            }
        }
    }
    return code;
}

inline int cmd_verify_main(const PointFileData& data, bool structured, std::ostream& out,
                           std::ostream& err) {
    int code = detail::report_invalid(data, err);
    std::vector<int> ord = detail::valid_ordinals(data);
    for (size_t i = 0; i < data.sets.size(); ++i) {
        const PointSet& ps = data.sets[i];
        if (ps.n() % 3 != 0) {
            err << "set " << ord[i] << ": n = " << ps.n() << " is not divisible by 3\n";
            code = std::max(code, 2);
            continue;
        }
        MainTheoremVerdict v = main_theorem_check(ps);
        bool violated = v.hypothesis && !v.decomposable;
        if (violated) code = 3;
        if (structured) {
            json j{{"set", ord[i]},
                   {"n", ps.n()},
                   {"tight", v.hypothesis},
                   {"decomposable", v.decomposable}};
            if (!v.hypothesis) j["first_failing_k"] = v.first_failing_k;
            if (violated) j["violation"] = true;
            out << j.dump() << "\n";
        } else {
            out << "# set " << ord[i] << "\n";
            out << "hypothesis: " << (v.hypothesis ? "TIGHT" : "NOT TIGHT")
                << "; decomposable: " << (v.decomposable ? "YES" : "NO") << "\n";
            if (!v.hypothesis) out << "first_failing_k: " << v.first_failing_k << "\n";
            if (violated) out << "MAIN THEOREM VIOLATED\n";
        }
    }
    return code;
}

inline int cmd_gen(const std::string& kind, int n, std::uint64_t seed, long long growth,
                   const std::string& output, std::ostream& out, std::ostream& err) {
    GenKind gk = gen_kind_from_string(kind);
    PointSet ps = generate(gk, n, seed, growth);
    std::ostringstream meta;
    meta << "gen kind=" << kind << " n=" << n << " seed=" << seed;
    if (gk == GenKind::three_ray) meta << " growth=" << growth;
    std::ostringstream body;
    write_point_file(body, ps, meta.str());
    if (output.empty()) {
        out << body.str();
    } else {
        std::ofstream f(output);
        if (!f) {
            err << "cannot write " << output << "\n";
            return 2;
        }
        f << body.str();
    }
    return 0;
}

inline int cmd_bounds(int n, int kcap, bool structured, std::ostream& out, std::ostream&) {
    int kmax = n / 2 - 1;
    if (kcap >= 0) kmax = std::min(kmax, kcap);
    std::vector<long long> bound;
    for (int k = 0; k <= kmax; ++k) bound.push_back(lower_bound_leq_k(n, k));
    long long top = cumulative_lower_bound_nm1(n);
    bool have_cap = n / 2 - 3 >= 0;
    long long cap = have_cap ? halving_upper_bound(n, lower_bound_leq_k(n, n / 2 - 3)) : -1;
    if (structured) {
        json j{{"n", n}, {"cumulative_bound", bound}, {"top_cumulative_bound", top}};
        if (have_cap) j["halving_cap_at_tight"] = cap;
        out << j.dump() << "\n";
    } else {
        out << "n: " << n << "\n";
        out << "cumulative_bound: " << detail::join(bound) << "\n";
        out << "top_cumulative_bound: " << top << "\n";
        if (have_cap) out << "halving_cap_at_tight: " << cap << "\n";
    }
    return 0;
}

inline int cmd_d0(int v, int m, bool structured, std::ostream& out, std::ostream&) {
    Digraph g = build_D0(v, m);
    if (structured) {
        json edges = json::array();
        for (auto& [a, b] : g.edges) edges.push_back({a, b});
        json j{{"v", v}, {"m", m}, {"count", g.edge_count()}, {"edges", edges}};
        out << j.dump() << "\n";
    } else {
        write_digraph(out, g, m);
    }
    return 0;
}

inline int cmd_k30(bool structured, std::ostream& out, std::ostream& err) {
    K30Report rep = k30_report();
    for (const K30Line& l : rep.lines) {
        if (structured)
            out << json{{"label", l.label}, {"computed", l.computed}, {"stated", l.stated},
                        {"ok", l.ok}}
                       .dump()
                << "\n";
        else
            out << l.label << ": " << l.computed << " (stated " << l.stated << ") "
                << (l.ok ? "OK" : "MISMATCH") << "\n";
    }
    if (structured)
        out << json{{"certified", rep.certified()}, {"all_ok", rep.all_ok()}}.dump() << "\n";
    else
        out << "cr(K_30) = " << rep.certified() << "\n";
    if (!rep.all_ok()) {
        err << "certification mismatch\n";
        return 3;
    }
    return 0;
}

// args: argv[1..] in natural order. All stdout is buffered per command.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact k-edge, crossing-number and circular-sequence toolkit"};
    app.require_subcommand(1);

    std::string input, format = "text", output, kind;
    int n = 0, bits = 0, v = 0, m = 0, kcap = -1;
    std::uint64_t seed = 1;
    long long growth = 8;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "text | structured (JSON lines)")
            ->check(CLI::IsMember({"text", "structured"}));
    };
    auto add_input = [&](CLI::App* c) {
        c->add_option("--input", input, "point file, or binary order-type db with --bits")
            ->required();
        c->add_option("--n", n, "points per set (binary input only)");
        c->add_option("--bits", bits, "binary coordinate width")->check(CLI::IsMember({8, 16}));
        add_format(c);
    };

    CLI::App* a_analyze =
        app.add_subcommand("analyze", "k-edge vectors, bounds, crossing identity");
    add_input(a_analyze);
    CLI::App* a_circ = app.add_subcommand("circseq", "circular sequence of a point set");
    add_input(a_circ);
    CLI::App* a_dec = app.add_subcommand("decomp", "search for a 3-decomposition");
    add_input(a_dec);
    CLI::App* a_ver = app.add_subcommand("verify-main", "tightness hypothesis vs decomposability");
    add_input(a_ver);

    CLI::App* a_gen = app.add_subcommand("gen", "generate a point set");
    a_gen->add_option("kind", kind, "convex | random-disk | three-ray")->required();
    a_gen->add_option("--n", n, "number of points")->required();
    a_gen->add_option("--seed", seed, "generator seed");
    a_gen->add_option("--growth", growth, "three-ray radius growth factor");
    a_gen->add_option("--output", output, "write to a file instead of stdout");

    CLI::App* a_bounds = app.add_subcommand("bounds", "level-count bounds for one n");
    a_bounds->add_option("--n", n, "number of points")->required();
    a_bounds->add_option("--k", kcap, "largest k to tabulate");
    add_format(a_bounds);

    CLI::App* a_d0 = app.add_subcommand("d0", "extremal descending digraph");
    a_d0->add_option("--v", v, "number of vertices")->required();
    a_d0->add_option("--m", m, "outdegree surplus")->required();
    add_format(a_d0);

    CLI::App* a_k30 = app.add_subcommand("k30", "replay the n = 30 certification chain");
    add_format(a_k30);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e, out, err);
        return c == 0 ? 0 : 2;
    }

    try {
        std::ostringstream buf;
        const bool structured = format == "structured";
        int code = 0;
        if (*a_analyze || *a_circ || *a_dec || *a_ver) {
            if (bits != 0 && n < 3)
                throw std::invalid_argument("binary input needs --n (at least 3)");
            PointFileData data = detail::load_sets(input, n, bits);
            if (*a_analyze)
                code = cmd_analyze(data, structured, buf, err);
            else if (*a_circ)
                code = cmd_circseq(data, structured, buf, err);
            else if (*a_dec)
                code = cmd_decomp(data, structured, buf, err);
            else
                code = cmd_verify_main(data, structured, buf, err);
        } else if (*a_gen) {
            code = cmd_gen(kind, n, seed, growth, output, buf, err);
        } else if (*a_bounds) {
            code = cmd_bounds(n, kcap, structured, buf, err);
        } else if (*a_d0) {
            code = cmd_d0(v, m, structured, buf, err);
        } else {
            code = cmd_k30(structured, buf, err);
        }
        out << buf.str();
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rcn::cli

#endif
