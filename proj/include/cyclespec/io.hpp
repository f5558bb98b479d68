#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "core.hpp"

namespace cyclespec {

// Text format for labelled Hamiltonian graphs: first line n, one "a b" pair
// per subsequent line. Blank lines and lines starting with '#' are skipped.

inline LabelledHamGraph read_ham_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n))
                throw Error("ham graph: line " + std::to_string(lineno) + ": expected vertex count");
        } else {
            int a, b;
            if (!(ss >> a >> b))
                throw Error("ham graph: line " + std::to_string(lineno) + ": expected 'a b'");
            pairs.emplace_back(a, b);
        }
    }
    if (n < 0) throw Error("ham graph: empty input");
    return make_ham_graph(n, pairs);
}

inline LabelledHamGraph read_ham_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return read_ham_graph(in);
}

inline void write_ham_graph(std::ostream& out, const LabelledHamGraph& g) {
    out << g.n << "\n";
    for (Chord e : g.chords) out << e.a << " " << e.b << "\n";
}

}  // namespace cyclespec
