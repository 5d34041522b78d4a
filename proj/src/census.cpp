#include "plethz/census.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace plethz {

namespace {

struct Flags {
    std::vector<std::pair<std::string, bool>> list; // in first-match priority order

    void add(const std::string& tag, bool on) { list.emplace_back(tag, on); }
    bool any() const {
        for (const auto& [t, on] : list)
            if (on) return true;
        return false;
    }
    std::string first() const {
        for (const auto& [t, on] : list)
            if (on) return t;
        return "unexplained";
    }
};

// All applicable certified-zero criteria for mu, in first-match priority order.
// `half` is the table at n/2 (transport criteria), null when unavailable.
Flags zero_flags(const Partition& mu, uint32_t n, const ZTable* half, uint32_t ni_max) {
    Flags f;
    uint32_t l = (uint32_t)mu.length();
    uint32_t tall_bound = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    f.add("tall", l > tall_bound);

    for (uint32_t i = 1; i <= ni_max; ++i) {
        if (n % (1u << i)) continue;
        f.add("n" + std::to_string(i), n_stat_doubled(mu, i) > (i64)n);
    }

    f.add("two_column", mu.first() <= 2 && z_closed_two_column(mu) == 0);
    f.add("hook", mu.is_hook() && l >= 2 && z_closed_hook(mu) == 0);

    bool near_hook_shape = n % 2 == 0 && n >= 4 && l >= 2 && mu[1] == 2 && mu[2] <= 1;
    f.add("near_hook", near_hook_shape && z_closed_near_hook(n, l) == 0);

    bool ik = false, icol = false, irow = false;
    if (n % 4 == 0) {
        uint32_t half_n = n / 2;
        Partition I = inside_partition(mu);
        if ((i64)l - (i64)I.size() == (i64)(half_n / 2) && l <= half_n) {
            uint32_t kk = half_n - l;
            uint32_t hi = (half_n + 3) / 4, lo = half_n / 4;
            ik = kk > hi;
            icol = I.first() <= 1 && kk != hi && kk != lo;
            irow = I.length() == 1 && binomial(binary_digit_count(half_n / 2), kk) == 0;
        }
    }
    f.add("inside_k", ik);
    f.add("inside_column", icol);
    f.add("inside_row", irow);

    bool lh = false, tc = false;
    if (half && n % 2 == 0) {
        uint32_t m = n / 2;
        if (l == m) lh = (half->at(strip_first_column(mu, m).conjugate()) == 0);
        if (mu.first() <= 3 && l <= m) tc = (half->at(rect_complement(mu, 3, m).conjugate()) == 0);
    }
    f.add("length_half", lh);
    f.add("three_column", tc);
    return f;
}

} // namespace

std::vector<CensusRow> classify_layer(const ZTable& zt, const ZTable* half,
                                      CensusReport& report, uint32_t ni_max) {
    report.n = zt.n;
    report.total = zt.ranker->count();
    std::vector<CensusRow> rows;
    rows.reserve(report.total);
    for (u64 r = 0; r < report.total; ++r) {
        CensusRow row;
        row.mu = zt.ranker->unrank(r);
        row.z = zt.values[r];
        if (row.z == 0) {
            ++report.zeros;
            Flags f = zero_flags(row.mu, zt.n, half, ni_max);
            for (const auto& [tag, on] : f.list)
                if (on) report.overlap_histogram[tag]++;
            row.reason = f.first();
            if (row.reason == "unexplained") report.unexplained.push_back(row.mu);
            else report.reason_histogram[row.reason]++;
        } else {
            // soundness audit: no certificate may fire on a nonzero entry
            Flags f = zero_flags(row.mu, zt.n, half, ni_max);
            if (f.any())
                throw theorem_violated("certificate '" + f.first() + "' fired on nonzero Z at " +
                                       row.mu.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string census_csv_path(uint32_t n, const std::string& out_dir) {
    return out_dir + "/census_" + std::to_string(n) + ".csv";
}

void write_census_csv(const std::vector<CensusRow>& rows, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw error("cannot write " + path);
    for (const auto& row : rows) {
        f << '"';
        const auto& parts = row.mu.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) f << ',';
            f << parts[i];
        }
        f << "\"," << u128_to_string(row.z) << "," << row.reason << "\n";
    }
}

std::string census_report_json(const CensusReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["total"] = report.total;
    j["zeros"] = report.zeros;
    j["explained"] = report.explained();
    j["reason_histogram"] = report.reason_histogram;
    j["overlap_histogram"] = report.overlap_histogram;
    std::vector<std::string> unexplained;
    for (const auto& p : report.unexplained) unexplained.push_back(p.str());
    j["unexplained"] = unexplained;
    j["runtime_seconds"] = report.runtime_seconds;
    return j.dump(2);
}

CensusReport run_census(uint32_t n, const CensusOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    ZOptions zopt{opt.cache_dir, opt.jobs, opt.algo};
    ZTable zt = z_table(n, zopt);
    std::optional<ZTable> half;
    if (n % 2 == 0 && n >= 2) half = z_table(n / 2, zopt);

    CensusReport report;
    std::vector<CensusRow> rows = classify_layer(zt, half ? &*half : nullptr, report, opt.ni_max);
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (opt.write_files) {
        std::filesystem::create_directories(opt.out_dir);
        write_census_csv(rows, census_csv_path(n, opt.out_dir));
        if (opt.format == "json") {
            std::ofstream f(opt.out_dir + "/census_" + std::to_string(n) + ".json",
                            std::ios::binary);
            f << census_report_json(report) << "\n";
        }
    }
    return report;
}

} // namespace plethz
