#pragma once

// Deterministic random generators for the property suites and the selftest
// command.  Valid Seifert matrices are produced by writing an arbitrary
// lower triangle against the standard symplectic pairing (so V - V^t is the
// block sum of [[0,1],[-1,0]]) and then applying random unimodular
// congruences, which preserve det(V - V^t) = +-1.

#include <cstdint>
#include <random>

#include "concordia/seifert.hpp"

namespace concordia {

class KnotRng {
  public:
    explicit KnotRng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }

    IntMatrix seifert_matrix(size_t genus, std::int64_t bound) {
        size_t n = 2 * genus;
        IntMatrix v(n, n, Integer(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j <= i; ++j) v(i, j) = uniform(-bound, bound);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                Integer pairing = 0;  // (V - V^t)_ij for the standard symplectic form
                if (j == i + 1 && i % 2 == 0) pairing = 1;
                v(i, j) = v(j, i) + pairing;
            }
        // random unimodular congruence
        size_t moves = static_cast<size_t>(uniform(0, 3));
        for (size_t k = 0; k < moves && n > 1; ++k) {
            size_t i = static_cast<size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
            size_t j = static_cast<size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
            if (i == j) continue;
            Integer f = uniform(-1, 1);
            if (f == 0) continue;
            for (size_t c = 0; c < n; ++c) v(i, c) += f * v(j, c);
            for (size_t r = 0; r < n; ++r) v(r, i) += f * v(r, j);
        }
        return v;
    }

    SeifertMatrix seifert(size_t max_genus, std::int64_t bound, bool allow_empty = true) {
        size_t lo = allow_empty ? 0 : 1;
        size_t genus = static_cast<size_t>(uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(max_genus)));
        return SeifertMatrix::validate(seifert_matrix(genus, bound));
    }

    IntVec column(size_t n, std::int64_t bound) {
        IntVec a(n);
        for (auto& x : a) x = uniform(-bound, bound);
        return a;
    }

    CrossingTriple triple(size_t max_genus, std::int64_t bound) {
        SeifertMatrix base = seifert(max_genus, bound);
        return crossing_triple(base, column(base.size(), bound), Integer(uniform(-bound, bound)));
    }

    Genus2MutationPair genus2_pair(std::int64_t bound) {
        IntMatrix a = seifert_matrix(static_cast<size_t>(uniform(1, 2)), bound);
        IntMatrix c = seifert_matrix(static_cast<size_t>(uniform(1, 2)), bound);
        return genus2_mutant(a, c, column(c.rows(), bound));
    }

    AmphicheiralData amphicheiral(std::int64_t bound, Integer epsilon = Integer(-1)) {
        Integer m = uniform(-bound, bound);
        Integer n = (uniform(0, 1) ? Integer(1) : Integer(-1)) - m;
        return amphicheiral_generator(m, n, column(4, bound), Integer(uniform(-bound, bound)), epsilon);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace concordia
