#pragma once

#include <json.hpp>

#include "census.hpp"
#include "containers.hpp"
#include "core.hpp"
#include "fingerprint.hpp"

namespace cyclespec {

using json = nlohmann::json;

inline json to_json(const CycleSet& s) { return json(s.sorted()); }

inline json to_json(Chord e) { return json::array({e.a, e.b}); }

inline json to_json(const std::vector<Chord>& cs) {
    json out = json::array();
    for (Chord e : cs) out.push_back(to_json(e));
    return out;
}

inline json to_json(const FingerprintResult& r) {
    return json{{"F", to_json(r.F)},
                {"F1", to_json(r.F1)},
                {"F2", to_json(r.F2)},
                {"achieved_spectrum_size", r.achieved_spectrum_size},
                {"guarantee", r.guarantee},
                {"target_size", r.target_size},
                {"pass", r.achieved_spectrum_size >= r.guarantee}};
}

inline json to_json(const Encoding& a) {
    json pairs = json::array();
    for (auto [cnt, gap] : a.pairs) pairs.push_back(json::array({cnt, gap}));
    return json{{"pairs", pairs}, {"t", a.t}, {"case", a.which_case}};
}

inline json to_json(const DyadicRational& r) {
    return json{{"numerator", r.numerator_str()}, {"denominator", r.denominator_str()}};
}

inline json to_json(const ContainerFamily& fam) {
    json members = json::array();
    for (const auto& m : fam.members)
        members.push_back(json{{"cycle_set", to_json(m.set)}, {"chords", to_json(m.chords)}});
    return json{{"n", fam.n},
                {"p", fam.p},
                {"hypothesis", fam.hypothesis == ContainerFamily::Hypothesis::max_degree
                                   ? "max-degree"
                                   : "edge-surplus"},
                {"member_size", fam.member_size},
                {"size_floor", fam.size_floor},
                {"members", members},
                {"weight_sum", to_json(weight_sum(fam))}};
}

inline ContainerFamily family_from_json(const json& j) {
    ContainerFamily fam;
    fam.n = j.at("n").get<int>();
    fam.p = j.at("p").get<int>();
    fam.hypothesis = j.at("hypothesis").get<std::string>() == "edge-surplus"
                         ? ContainerFamily::Hypothesis::edge_surplus
                         : ContainerFamily::Hypothesis::max_degree;
    fam.member_size = j.value("member_size", 0);
    fam.size_floor = j.value("size_floor", 0);
    for (const auto& m : j.at("members")) {
        ContainerFamily::Member mem;
        mem.set = CycleSet(fam.n);
        for (int l : m.at("cycle_set").get<std::vector<int>>()) mem.set.insert(l);
        if (m.contains("chords"))
            for (const auto& c : m.at("chords"))
                mem.chords.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
        fam.members.push_back(std::move(mem));
    }
    return fam;
}

inline json to_json(const CensusRecord& rec) {
    json sets = json::array();
    for (const CycleSet& s : rec.distinct_sets()) sets.push_back(to_json(s));
    return json{{"n", rec.n},
                {"graphs_scanned", rec.graphs_scanned},
                {"count", rec.count()},
                {"distinct_sets", sets},
                {"source", rec.source}};
}

inline std::string census_csv(const CensusRecord& rec) {
    std::string out;
    for (const CycleSet& s : rec.distinct_sets()) {
        auto lens = s.sorted();
        for (size_t i = 0; i < lens.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(lens[i]);
        }
        out += '\n';
    }
    return out;
}

inline json to_json(const BoundsReport& r) {
    return json{{"n", r.n},
                {"count", r.count},
                {"trivial_bound", r.trivial_bound},
                {"faudree_floor", r.faudree_floor},
                {"ratio", r.ratio}};
}

inline json to_json(const PartitionReport& r) {
    return json{{"g1", r.g1},      {"g2", r.g2},
                {"g3", r.g3},      {"g4", r.g4},
                {"covered", r.covered()}, {"circumference", r.circumference}};
}

inline json to_json(const Case2Witness& w) {
    json spectra = json::array();
    for (const CycleSet& s : w.level_spectra) spectra.push_back(to_json(s));
    json chain = json::array();
    for (const auto& S : w.s_chain) chain.push_back(to_json(S));
    return json{{"f", to_json(w.f)},
                {"antichain", to_json(w.antichain)},
                {"independent", to_json(w.independent)},
                {"usable", to_json(w.usable)},
                {"x", w.x},
                {"L", w.L},
                {"k", w.k},
                {"s_chain", chain},
                {"level_gaps", w.level_gaps},
                {"level_spectra", spectra},
                {"gap_condition", w.gap_condition},
                {"levels_disjoint", w.levels_disjoint},
                {"spectrum_size", w.spectrum_size},
                {"floor_bound", w.floor_bound}};
}

}  // namespace cyclespec
