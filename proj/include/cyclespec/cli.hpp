#pragma once

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "census.hpp"
#include "containers.hpp"
#include "fingerprint.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "json_io.hpp"
#include "pair_cycle.hpp"
#include "spectrum.hpp"

namespace cyclespec::cli {

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

inline Chord parse_chord(const std::string& s) {
    auto v = parse_int_list(s);
    if (v.size() != 2) throw Error("expected a chord as 'a,b', got '" + s + "'");
    return {v[0], v[1]};
}

inline int default_jobs() {
    if (const char* env = std::getenv("CYCLESPEC_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

// Quick embedded oracle checks for `selftest`.
inline int selftest(std::ostream& out, std::uint64_t seed) {
    int failures = 0;
    auto check = [&](bool ok, const std::string& name) {
        out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };
    {
        bool ok = true;
        for (int n = 5; n <= 10 && ok; ++n) {
            std::vector<Chord> chords;
            for (int a = 1; a <= n; ++a)
                for (int b = a + 2; b <= n; ++b)
                    if (valid_chord({a, b}, n)) chords.push_back({a, b});
            for (size_t i = 0; i < chords.size() && ok; ++i)
                for (size_t j = i + 1; j < chords.size() && ok; ++j) {
                    Cycle c = pair_cycle(n, chords[i], chords[j]);
                    LabelledHamGraph g{n, {chords[i], chords[j]}};
                    ok = is_cycle_of(c, g) &&
                         c.length() == pair_cycle_length(n, chords[i], chords[j]);
                }
        }
        check(ok, "pair cycles are valid and match their closed-form lengths (n <= 10)");
    }
    {
        CensusRecord rec = census_exhaustive(4);
        check(rec.count() == 4, "census(4) finds 4 distinct cycle sets");
    }
    {
        Rng rng(seed);
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            StarInstance s = star_instance(rng, 4, 40, 200);
            FingerprintResult r = fingerprint(s.n, s.chords);
            ok = r.achieved_spectrum_size >= r.guarantee;
        }
        check(ok, "fingerprint guarantee holds on seeded star families");
    }
    {
        Encoding a{{{2, 2}, {1, 3}}, 2, 1};
        check(encoding_spectrum(a, 10).sorted() == std::vector<int>({3, 5, 6, 7, 8, 10}),
              "subset-sum spectrum of ((2,2),(1,3)) at n=10");
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace detail

// Dispatches a full command line. Returns the process exit code: 0 success,
// 1 domain error (structured JSON error on stdout), 2 usage error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cycle-set toolkit: spectra, fingerprints, containers, census"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.jobs = detail::default_jobs();
    app.add_option("--K", cfg.K, "threshold constant for the H1/H2 split");
    app.add_option("--seed", cfg.seed, "seed for randomized instance generation");
    app.add_option("--jobs,-j", cfg.jobs, "worker count (results never depend on it)");
    app.add_option("--limit-general-n", cfg.limits.max_n_general,
                   "max n for general-graph spectra");
    app.add_option("--limit-chords", cfg.limits.max_chords,
                   "max chords for structured spectra");
    app.add_option("--limit-census-n", cfg.limits.max_census_n, "max n for exhaustive census");

    std::string input, graph6_path, format = "json", family_path, graphs_path, checkpoint, a_list;
    int n = 0, p = 0;
    std::string chord_e, chord_f;

    auto* sc_spectrum = app.add_subcommand("spectrum", "cycle set of a graph");
    sc_spectrum->add_option("--input", input, "labelled Hamiltonian graph file");
    sc_spectrum->add_option("--graph6", graph6_path, "graph6 file (one graph per line)");
    sc_spectrum->add_option("--format", format, "json");

    auto* sc_pair = app.add_subcommand("pair-cycle", "designated cycle through two chords");
    sc_pair->add_option("--n", n, "circle size")->required();
    sc_pair->add_option("--e", chord_e, "first chord a,b")->required();
    sc_pair->add_option("--f", chord_f, "second chord a,b")->required();

    auto* sc_fp = app.add_subcommand("fingerprint", "greedy fingerprint of the chord set");
    sc_fp->add_option("--input", input, "labelled Hamiltonian graph file")->required();

    auto* sc_encode = app.add_subcommand("encode", "gap encoding of an independent witness");
    sc_encode->add_option("--input", input, "labelled Hamiltonian graph file")->required();
    sc_encode->add_option("--p", p, "edge surplus (default: chord count)");

    auto* sc_family = app.add_subcommand("family-prime", "container family for max degree p");
    sc_family->add_option("--n", n, "vertex count")->required();
    sc_family->add_option("--p", p, "degree threshold")->required();

    auto* sc_cover = app.add_subcommand("cover-check", "family covers the given graphs");
    sc_cover->add_option("--family", family_path, "family JSON file")->required();
    sc_cover->add_option("--graphs", graphs_path, "JSON array of {n, chords} graphs")->required();

    auto* sc_census = app.add_subcommand("census", "distinct cycle sets over a graph universe");
    sc_census->add_option("--n", n, "vertex count (exhaustive labeled mode)");
    sc_census->add_option("--graph6", graph6_path, "graph6 stream mode");
    sc_census->add_option("--checkpoint", checkpoint, "checkpoint directory for stream mode");
    sc_census->add_option("--format", format, "json|csv");

    auto* sc_faudree = app.add_subcommand("faudree", "path-plus-star construction");
    sc_faudree->add_option("--n", n, "vertex count (even)")->required();
    sc_faudree->add_option("--A", a_list, "comma-separated subset of {n/2+1,...,n}");

    auto* sc_report = app.add_subcommand("report", "bound comparisons for a census");
    sc_report->add_option("--census", input, "census JSON file")->required();

    app.add_subcommand("selftest", "run the embedded oracle suite");

    try {
        std::vector<const char*> argv;
        argv.push_back("cyclespec");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (sc_spectrum->parsed()) {
            if (!input.empty()) {
                LabelledHamGraph g = read_ham_graph_file(input);
                out << json{{"n", g.n}, {"cycle_set", to_json(spectrum(g, cfg.limits))}}.dump()
                    << "\n";
            } else if (!graph6_path.empty()) {
                std::ifstream in(graph6_path);
                if (!in) throw Error("cannot open file: " + graph6_path);
                json rows = json::array();
                std::string line;
                while (std::getline(in, line)) {
                    if (!line.empty() && line.back() == '\r') line.pop_back();
                    if (line.empty()) continue;
                    GeneralGraph g = graph6_decode(line);
                    rows.push_back(
                        json{{"n", g.n}, {"cycle_set", to_json(spectrum(g, cfg.limits))}});
                }
                out << rows.dump() << "\n";
            } else {
                throw Error("spectrum: need --input or --graph6");
            }
        } else if (sc_pair->parsed()) {
            Chord e = detail::parse_chord(chord_e), f = detail::parse_chord(chord_f);
            Cycle c = pair_cycle(n, e, f);
            out << json{{"cycle", c.vertices},
                        {"length", c.length()},
                        {"kind", to_string(pair_kind(e, f))}}
                       .dump()
                << "\n";
        } else if (sc_fp->parsed()) {
            LabelledHamGraph g = read_ham_graph_file(input);
            out << to_json(fingerprint(g.n, g.chords, cfg.limits)).dump() << "\n";
        } else if (sc_encode->parsed()) {
            LabelledHamGraph g = read_ham_graph_file(input);
            if (p == 0) p = static_cast<int>(g.chords.size());
            Classification cls = classify(g, p, cfg.K);
            std::vector<Chord> I = max_independent(g.chords);
            Encoding a = encode_gaps(g, I, p);
            out << json{{"h1", cls.h1},
                        {"threshold", cls.threshold},
                        {"witness", to_json(cls.witness)},
                        {"independent", to_json(I)},
                        {"encoding", to_json(a)},
                        {"encoding_spectrum", to_json(encoding_spectrum(a, g.n))},
                        {"sound", encoding_soundness_check(g, a, cfg.limits)}}
                       .dump()
                << "\n";
        } else if (sc_family->parsed()) {
            out << to_json(family_prime(n, p, cfg.limits)).dump() << "\n";
        } else if (sc_cover->parsed()) {
            std::ifstream famf(family_path);
            if (!famf) throw Error("cannot open file: " + family_path);
            ContainerFamily fam = family_from_json(json::parse(famf));
            std::ifstream gf(graphs_path);
            if (!gf) throw Error("cannot open file: " + graphs_path);
            std::vector<LabelledHamGraph> graphs;
            for (const auto& jg : json::parse(gf)) {
                std::vector<std::pair<int, int>> pairs;
                for (const auto& c : jg.at("chords"))
                    pairs.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
                graphs.push_back(make_ham_graph(jg.at("n").get<int>(), pairs));
            }
            CoverReport rep = cover_check(fam, graphs, cfg.limits, cfg.jobs);
            json failures = json::array();
            for (const auto& fmore : rep.failures)
                failures.push_back(json{{"index", fmore.index}, {"reason", fmore.reason}});
            out << json{{"pass", rep.pass}, {"failures", failures}}.dump() << "\n";
        } else if (sc_census->parsed()) {
            CensusRecord rec;
            if (!graph6_path.empty()) {
                rec = census_stream(graph6_path, cfg, checkpoint);
            } else if (n > 0) {
                rec = census_exhaustive(n, cfg);
            } else {
                throw Error("census: need --n or --graph6");
            }
            if (format == "csv")
                out << census_csv(rec);
            else
                out << to_json(rec).dump() << "\n";
        } else if (sc_faudree->parsed()) {
            GeneralGraph g = faudree(n, detail::parse_int_list(a_list));
            out << json{{"cycle_set", to_json(spectrum(g, cfg.limits))}}.dump() << "\n";
        } else if (sc_report->parsed()) {
            std::ifstream in(input);
            if (!in) throw Error("cannot open file: " + input);
            json j = json::parse(in);
            CensusRecord rec;
            rec.n = j.at("n").get<int>();
            rec.graphs_scanned = j.at("graphs_scanned").get<std::uint64_t>();
            for (const auto& s : j.at("distinct_sets")) {
                std::uint32_t mask = 0;
                for (int l : s.get<std::vector<int>>()) mask |= 1u << l;
                rec.distinct_masks.push_back(mask);
            }
            rec.source = j.value("source", "");
            out << to_json(bounds_report(rec)).dump() << "\n";
        } else {  // selftest
            return detail::selftest(out, cfg.seed);
        }
    } catch (const Error& e) {
        out << json{{"error", {{"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace cyclespec::cli
