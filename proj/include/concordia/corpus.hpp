#pragma once

// Embedded corpus of named Seifert matrices, so every command and test runs
// without external data.
//
// Handedness convention: trefoil_R is fixed as [[-1,1],[0,-1]].  Under this
// choice sigma_{-1}(trefoil_R) = -2; swapping the convention to the mirror
// flips the global sign of every signature reported by the library.

#include <string>
#include <vector>

#include "concordia/error.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

struct KnotRecord {
    std::string name;
    SeifertMatrix seifert;
    std::vector<std::string> tags;
};

inline SeifertMatrix trefoil_R() {
    return SeifertMatrix::validate(IntMatrix{{Integer(-1), Integer(1)}, {Integer(0), Integer(-1)}}, "trefoil_R");
}
inline SeifertMatrix trefoil_L() {
    SeifertMatrix m = mirror(trefoil_R());
    return SeifertMatrix::validate(m.matrix(), "trefoil_L");
}
inline SeifertMatrix figure_eight() {
    return SeifertMatrix::validate(IntMatrix{{Integer(1), Integer(1)}, {Integer(0), Integer(-1)}}, "figure_eight");
}
// genus-1 companion-carrier with Seifert matrix [[0,2],[1,0]]
inline SeifertMatrix knot_K_J() {
    return SeifertMatrix::validate(IntMatrix{{Integer(0), Integer(2)}, {Integer(1), Integer(0)}}, "K_J");
}
inline SeifertMatrix unknot() { return SeifertMatrix::validate(IntMatrix(0, 0), "unknot"); }

inline Genus2MutationPair genus2_sample() {
    return genus2_mutant(IntMatrix{{Integer(0), Integer(2)}, {Integer(1), Integer(0)}},
                         IntMatrix{{Integer(-1), Integer(1)}, {Integer(0), Integer(-1)}},
                         {Integer(1), Integer(0)});
}

inline AmphicheiralData amphicheiral_sample() {
    return amphicheiral_generator(Integer(1), Integer(0),
                                  {Integer(1), Integer(0), Integer(0), Integer(0)}, Integer(1), Integer(-1));
}

inline const std::vector<KnotRecord>& corpus() {
    static const std::vector<KnotRecord> knots = [] {
        std::vector<KnotRecord> v;
        v.push_back({"unknot", unknot(), {"trivial"}});
        v.push_back({"trefoil_R", trefoil_R(), {"torus", "right-handed"}});
        v.push_back({"trefoil_L", trefoil_L(), {"torus", "left-handed"}});
        v.push_back({"figure_eight", figure_eight(), {"amphicheiral"}});
        v.push_back({"K_J", knot_K_J(), {"companion-carrier", "genus-1"}});
        v.push_back({"genus2_sample_V", genus2_sample().V, {"genus-2-mutation"}});
        v.push_back({"genus2_sample_Vstar", genus2_sample().Vstar, {"genus-2-mutation"}});
        v.push_back({"amphicheiral_sample", build_v_epsilon(amphicheiral_sample()), {"strongly-positive-amphicheiral"}});
        return v;
    }();
    return knots;
}

inline const KnotRecord* corpus_find(const std::string& name) {
    for (const auto& rec : corpus())
        if (rec.name == name) return &rec;
    return nullptr;
}

}  // namespace concordia
