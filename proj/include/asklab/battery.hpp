#pragma once

#include "asklab/grouplab.hpp"
#include "asklab/pipeline.hpp"

namespace asklab {

struct RepEntry {
    ModuleRep rep;
    std::optional<bool> expect_alternating;
    std::optional<bool> expect_immersive;
};

struct PipelineEntry {
    AffineScheme scheme;
    BBDecomposition decomp;
};

struct BatteryConfig {
    std::vector<RepEntry> reps;
    std::vector<Graph> graphs;
    std::vector<LieData> lie;
    std::vector<PipelineEntry> pipelines;
    std::vector<PrimePower> qs;
    int m_max = 3;
    int n_max = 3;
};

// Runs every registered identity over the configured inputs and parameter
// grids, skipping combinations that do not fit the budget. Exceptions inside
// a check become FAIL rows carrying the error text; the report itself never
// throws. An empty config yields an empty passing report.
VerificationReport verify_battery(const BatteryConfig& config, const Budget& budget = {},
                                  unsigned threads = 1);

}  // namespace asklab
