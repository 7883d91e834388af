#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hvkit/rng.hpp"
#include "hvkit/solution_set.hpp"

namespace hvkit {

struct TrainingRecord {
    SolutionSet set;  // M x n, entries in [0, 1], mutually non-dominated
    double hv;        // exact hypervolume against reference 0
};

// One record: draw n uniform in [1, 100]; sample a cloud of 1000 uniform
// points in the unit cube; sort it into fronts; if no front has at least n
// members, resample the cloud (n stays fixed); pick a qualifying front
// uniformly, then n of its members without replacement; attach the exact
// hypervolume. More than 100 cloud resamples aborts with a diagnostic --
// the recipe assumes qualifying fronts exist, which can fail for small M
// with large n. resample_rounds, when given, reports how many extra clouds
// were needed.
TrainingRecord gen_solution_set(int m, Rng& rng, int* resample_rounds = nullptr);

struct Dataset {
    int m = 0;
    std::vector<TrainingRecord> records;
};

// Binary record file plus "<path>.manifest" with the given text lines.
void save_dataset(const Dataset& ds, const std::string& path,
                  const std::vector<std::string>& manifest_lines);

Dataset load_dataset(const std::string& path);

// count records, one derived stream per record index, written to path.
// Byte-identical output for identical (m, count, seed).
void gen_dataset(int m, std::uint64_t count, std::uint64_t seed,
                 const std::string& path);

// Every record padded to M=10 with unit objectives; hypervolume values are
// unchanged by construction. Inputs must have 2 <= m <= 10.
Dataset pad_dataset(const std::vector<Dataset>& inputs);

}  // namespace hvkit
