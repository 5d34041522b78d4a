#pragma once

#include <map>
#include <string>
#include <vector>

#include "plethz/sylow.hpp"

namespace plethz {

struct CensusOptions {
    std::string cache_dir;
    std::string out_dir = ".";
    uint32_t jobs = 0;
    std::string algo = "thma-aggregated";
    std::string format = "csv"; // table csv always written; "json" adds a report file
    uint32_t ni_max = 6;
    bool write_files = true;
};

struct CensusReport {
    uint32_t n = 0;
    u64 total = 0;
    u64 zeros = 0;
    std::map<std::string, u64> reason_histogram;  // first-match, partitioning the zeros
    std::map<std::string, u64> overlap_histogram; // independent per-criterion counts
    std::vector<Partition> unexplained;
    double runtime_seconds = 0;

    u64 explained() const { return zeros - unexplained.size(); }
};

// Per-partition classification row.
struct CensusRow {
    Partition mu;
    zval z = 0;
    std::string reason; // first-match tag, empty when z > 0
};

CensusReport run_census(uint32_t n, const CensusOptions& opt);

// Classification of one layer against its half-layer table (null when n is odd).
std::vector<CensusRow> classify_layer(const ZTable& zt, const ZTable* half,
                                      CensusReport& report, uint32_t ni_max);

std::string census_csv_path(uint32_t n, const std::string& out_dir);
void write_census_csv(const std::vector<CensusRow>& rows, const std::string& path);
std::string census_report_json(const CensusReport& report);

} // namespace plethz
