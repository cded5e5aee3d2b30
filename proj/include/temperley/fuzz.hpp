#pragma once

// Randomized verification: generate bridgeless embedded planar graphs
// (random stacked triangulation, then random edge deletions that preserve
// 2-edge-connectivity, then a random root on the outer face) and run the
// full verifier on each.  Everything is deterministic for a fixed seed.

#include <cstdint>
#include <vector>

#include "temperley/verify.hpp"

namespace temperley {

class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  private:
    uint64_t state_;
};

// Valid by construction: never emits bridges, disconnection or a misplaced
// root, so verification failures always indicate pipeline bugs.
EmbeddedPlanarGraph random_planar_graph(Rng& rng, int max_edges, const std::string& name);

struct FuzzOptions {
    int count = 100;
    int max_edges = 10;
    uint64_t seed = 1;
};

struct FuzzOutcome {
    std::string name;
    int edges = 0;
    VerificationReport report;
};

std::vector<FuzzOutcome> run_fuzz(const FuzzOptions& options, const VerifyOptions& verify = {});

} // namespace temperley
