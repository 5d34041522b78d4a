#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "plethz/census.hpp"
#include "plethz/plethysm.hpp"
#include "plethz/sylow.hpp"

using namespace plethz;

namespace {

std::string default_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PLETH_CACHE_DIR")) return env;
    return "";
}

struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw VerifyFailure(what);
}

std::pair<uint32_t, uint32_t> parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        uint32_t v = (uint32_t)std::stoul(text);
        return {v, v};
    }
    return {(uint32_t)std::stoul(text.substr(0, pos)),
            (uint32_t)std::stoul(text.substr(pos + 2))};
}

int verify_pleth_oracle(uint32_t max_mn) {
    u64 checked = 0;
    for (uint32_t m = 1; m <= max_mn; ++m) {
        for (uint32_t n = 1; m * n <= max_mn; ++n) {
            auto lams = partitions_of(n);
            auto mus = partitions_of(m * n);
            for (const auto& lam : lams) {
                IrrDecomposition full = plethysm_oracle(lam, Partition{m});
                for (const auto& mu : mus) {
                    i64 rec = pleth_recursive(mu, lam, m);
                    require(rec == full.coeff(mu),
                            "pleth-oracle mismatch at mu=" + mu.str() + " lam=" + lam.str() +
                                " m=" + std::to_string(m));
                    ++checked;
                }
            }
        }
    }
    std::cout << "pleth-oracle: " << checked << " coefficients checked, PASS\n";
    return 0;
}

int verify_sylow_oracle(uint32_t max_n, uint32_t extended, const ZOptions& zopt) {
    for (uint32_t n = 1; n <= max_n; ++n) {
        ZTable zt = z_table(n, zopt);
        u64 cnt = zt.ranker->count();
        for (u64 r = 0; r < cnt; ++r) {
            Partition lam = zt.ranker->unrank(r);
            require(zt.values[r] == sylow_branching_oracle(lam, std::max(max_n, 16u)),
                    "sylow-oracle mismatch at " + lam.str());
        }
        std::cout << "sylow-oracle: n=" << n << " ok (" << cnt << " values)\n";
    }
    if (extended) {
        ZTable zt = z_table(extended, zopt);
        u64 cnt = zt.ranker->count();
        for (u64 r = 0; r < cnt; ++r) {
            Partition lam = zt.ranker->unrank(r);
            require(zt.values[r] == sylow_branching_oracle(lam, extended),
                    "sylow-oracle extended mismatch at " + lam.str());
        }
        std::cout << "sylow-oracle: extended n=" << extended << " ok (" << cnt << " values)\n";
    }
    std::cout << "sylow-oracle: PASS\n";
    return 0;
}

int verify_closed_forms(uint32_t max_n, const ZOptions& zopt) {
    for (uint32_t n = 2; n <= max_n; n *= 2) {
        ZTable zt = z_table(n, zopt);
        u64 cnt = zt.ranker->count();
        for (u64 r = 0; r < cnt; ++r) {
            Partition lam = zt.ranker->unrank(r);
            if (lam.is_hook())
                require(zt.values[r] == z_closed_hook(lam), "hook closed form at " + lam.str());
            if (lam.first() <= 2)
                require(zt.values[r] == z_closed_two_column(lam),
                        "two-column closed form at " + lam.str());
            if (lam.length() >= 2 && lam[1] == 2 && lam[2] <= 1)
                require(zt.values[r] == z_closed_near_hook(n, (uint32_t)lam.length()),
                        "near-hook closed form at " + lam.str());
        }
        std::cout << "closed-forms: n=" << n << " ok\n";
    }
    std::cout << "closed-forms: PASS\n";
    return 0;
}

int verify_deboeck(std::pair<uint32_t, uint32_t> ms, std::pair<uint32_t, uint32_t> ns) {
    for (uint32_t m = ms.first; m <= ms.second; ++m)
        for (uint32_t n = ns.first; n <= ns.second; ++n) {
            DeBoeckReport rep = check_de_boeck_651(m, n);
            std::cout << "deboeck 6.5.1: m=" << m << " n=" << n << " checked=" << rep.checked
                      << " ok\n";
            if (m >= 3 && n >= 3) {
                Partition lam = check_de_boeck_652(m, n);
                std::cout << "deboeck 6.5.2: m=" << m << " n=" << n << " minimal " << lam.str()
                          << " ok\n";
            }
        }
    std::cout << "deboeck: PASS\n";
    return 0;
}

int verify_stability(uint32_t j_max) {
    std::vector<std::pair<Partition, Partition>> samples = {
        {Partition{1}, Partition{2}},          {Partition{2}, Partition{2, 2}},
        {Partition{2}, Partition{3, 1}},       {Partition{1, 1}, Partition{2, 2}},
        {Partition{1, 1}, Partition{2, 1, 1}}, {Partition{3}, Partition{4, 2}},
        {Partition{2, 1}, Partition{4, 2}},    {Partition{2, 1}, Partition{3, 2, 1}},
        {Partition{3, 1}, Partition{5, 3}},    {Partition{2, 2}, Partition{4, 4}},
    };
    for (const auto& [lam, mu] : samples) {
        StabilityReport rep = check_stability_prop17(lam, mu, j_max);
        require(rep.stabilized, "stability: no constant tail for lam=" + lam.str() +
                                    " mu=" + mu.str());
        std::cout << "stability: lam=" << lam.str() << " mu=" << mu.str() << " stable value "
                  << rep.stable_value << " from j=" << rep.stabilization_index << "\n";
    }
    std::cout << "stability: PASS\n";
    return 0;
}

int verify_star_closure(uint32_t closure_n, const ZOptions& zopt) {
    ClosureReport cr = check_geq3_closure(closure_n, zopt);
    require(cr.ok(), "star closure violated at n=" + std::to_string(closure_n));
    std::cout << "star-closure: n=" << closure_n << " |A|=" << cr.set_size
              << " products=" << cr.products << " ok\n";
    for (uint32_t n : {4u, 5u})
        for (uint32_t k : {2u, 3u}) {
            RectangleReport rr = check_rectangle_containment(n, k);
            require(rr.ok(), "rectangle containment fails at n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
            std::cout << "star-closure: rectangle n=" << n << " k=" << k
                      << " box=" << rr.box_size << " ok\n";
        }
    std::cout << "star-closure: PASS\n";
    return 0;
}

int verify_proof_machinery(uint32_t max_deg);

int report_conjectures(uint32_t ab_max, uint32_t k2c, const ZOptions& zopt) {
    for (uint32_t a = 1; a * a <= ab_max; ++a)
        for (uint32_t b = a; a * b <= ab_max; ++b) {
            Conj18Report rep = check_conjecture18(a, b);
            std::cout << "conjecture-18: a=" << a << " b=" << b << " min(i)=" << rep.min_coeff_i
                      << " min(ii)=" << rep.min_coeff_ii
                      << (rep.holds() ? " (holds)" : " (COUNTEREXAMPLE?)") << "\n";
        }
    for (uint32_t k = 2; k <= k2c; ++k) {
        Conj2cReport rep = check_conjecture_2c(k, zopt);
        std::cout << "conjecture-2c: k=" << k << " found {";
        for (size_t i = 0; i < rep.found.size(); ++i)
            std::cout << (i ? ", " : "") << rep.found[i].str();
        std::cout << "} predicted {";
        for (size_t i = 0; i < rep.predicted.size(); ++i)
            std::cout << (i ? ", " : "") << rep.predicted[i].str();
        std::cout << "} " << (rep.matches() ? "(matches)" : "(differs)") << "\n";
    }
    std::cout << "conjectures: report only, no assertions\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact plethysm coefficients and Sylow 2-branching coefficients "
                 "of symmetric groups"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_flag;
    app.add_option("--cache-dir", cache_flag,
                   "cache directory (default: $PLETH_CACHE_DIR if set)");

    // pleth
    auto* sc_pleth = app.add_subcommand("pleth", "a^mu_{lambda,(m)} by the recursive formula");
    std::string arg_mu, arg_lam;
    uint32_t arg_m = 0;
    bool flag_oracle = false;
    sc_pleth->add_option("mu", arg_mu, "outer partition, e.g. [4,2]")->required();
    sc_pleth->add_option("lambda", arg_lam, "inner-left partition, e.g. [3]")->required();
    sc_pleth->add_option("m", arg_m, "row length of the inner one-row partition")->required();
    sc_pleth->add_flag("--oracle", flag_oracle, "cross-check against the power-sum oracle");

    // deflate
    auto* sc_deflate = app.add_subcommand("deflate", "deflation of mu with respect to S_n");
    std::string arg_dmu;
    uint32_t arg_dn = 0;
    sc_deflate->add_option("mu", arg_dmu)->required();
    sc_deflate->add_option("n", arg_dn)->required();

    // zcoeff
    auto* sc_z = app.add_subcommand("zcoeff", "Sylow branching coefficient Z^lambda at p=2");
    std::string arg_zlam;
    bool flag_zoracle = false;
    uint32_t arg_zbound = kSylowOracleBound;
    sc_z->add_option("lambda", arg_zlam)->required();
    sc_z->add_flag("--oracle", flag_zoracle, "cross-check against the cycle-index oracle");
    sc_z->add_option("--oracle-bound", arg_zbound, "size cap for the oracle (default 16)");

    // census
    auto* sc_census = app.add_subcommand(
        "census", "full Z table with vanishing classification; zeros are first-match "
                  "classified in priority order tall, n1..n6, two_column, hook, near_hook, "
                  "inside_k, inside_column, inside_row, length_half, three_column; the "
                  "overlapping histogram counts every applicable criterion independently");
    uint32_t arg_cn = 0, arg_jobs = 0;
    std::string arg_format = "csv", arg_outdir = ".", arg_algo = "thma-aggregated";
    sc_census->add_option("n", arg_cn)->required();
    sc_census->add_option("--jobs", arg_jobs, "worker count (default: hardware)");
    sc_census->add_option("--format", arg_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sc_census->add_option("--out-dir", arg_outdir, "output directory for table files");
    sc_census->add_option("--algo", arg_algo, "thma-aggregated|plain-m2|oracle-pairing")
        ->check(CLI::IsMember({"thma-aggregated", "plain-m2", "oracle-pairing"}));

    // verify
    auto* sc_verify = app.add_subcommand("verify", "named verification suites");
    std::string arg_suite;
    uint32_t arg_maxmn = 12, arg_maxn = 16, arg_extended = 0, arg_jmax = 10, arg_abmax = 12,
             arg_k2c = 3, arg_maxdeg = 12, arg_closure_n = 8, arg_cf_max = 32;
    std::string arg_mrange = "2..4", arg_nrange = "3..5";
    sc_verify
        ->add_option("suite", arg_suite,
                     "pleth-oracle|sylow-oracle|closed-forms|deboeck|stability|star-closure|"
                     "proof-machinery|conjectures")
        ->required();
    sc_verify->add_option("--max-mn", arg_maxmn, "pleth-oracle: cap on m*n");
    sc_verify->add_option("--max-n", arg_maxn, "sylow-oracle: largest layer");
    sc_verify->add_option("--extended-n", arg_extended, "sylow-oracle: one extra large layer");
    sc_verify->add_option("--cf-max-n", arg_cf_max, "closed-forms: largest power-of-two layer");
    sc_verify->add_option("--m", arg_mrange, "deboeck: m range a..b");
    sc_verify->add_option("--n", arg_nrange, "deboeck: n range a..b");
    sc_verify->add_option("--jmax", arg_jmax, "stability: padding window");
    sc_verify->add_option("--ab-max", arg_abmax, "conjectures: cap on a*b");
    sc_verify->add_option("--k2c", arg_k2c, "conjectures: largest k for conjecture 2c");
    sc_verify->add_option("--closure-n", arg_closure_n, "star-closure: layer for A*A");
    sc_verify->add_option("--max-deg", arg_maxdeg, "proof-machinery: total degree cap");

    // cache
    auto* sc_cache = app.add_subcommand("cache", "cache management");
    std::string arg_cache_op;
    sc_cache->add_option("op", arg_cache_op, "list|clear")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ZOptions zopt;
    zopt.cache_dir = default_cache_dir(cache_flag);

    try {
        if (*sc_pleth) {
            Partition mu = parse_partition(arg_mu), lam = parse_partition(arg_lam);
            i64 v = pleth_recursive(mu, lam, arg_m);
            std::cout << v << "\n";
            if (flag_oracle) {
                i64 ov = plethysm_oracle(lam, Partition{arg_m}).coeff(mu);
                std::cout << "oracle " << ov << " " << (ov == v ? "PASS" : "FAIL") << "\n";
                if (ov != v) return 1;
            }
            return 0;
        }
        if (*sc_deflate) {
            Partition mu = parse_partition(arg_dmu);
            IrrDecomposition d = deflate(mu, arg_dn);
            for (const auto& [lam, c] : d.coeffs) std::cout << c << " " << lam.str() << "\n";
            return 0;
        }
        if (*sc_z) {
            Partition lam = parse_partition(arg_zlam);
            zval v = z_value(lam, zopt);
            std::cout << u128_to_string(v) << "\n";
            std::string closed;
            if (lam.is_hook() && !lam.empty()) closed = "hook";
            else if (lam.first() <= 2) closed = "two-column";
            else if (lam.length() >= 2 && lam[1] == 2 && lam[2] <= 1 && lam.size() % 2 == 0)
                closed = "near-hook";
            if (!closed.empty()) std::cout << "closed-form: " << closed << "\n";
            if (flag_zoracle) {
                u64 ov = sylow_branching_oracle(lam, arg_zbound);
                std::cout << "oracle " << ov << " " << ((u128)ov == v ? "PASS" : "FAIL") << "\n";
                if (ov != v) return 1;
            }
            return 0;
        }
        if (*sc_census) {
            CensusOptions copt;
            copt.cache_dir = zopt.cache_dir;
            copt.jobs = arg_jobs;
            copt.format = arg_format;
            copt.out_dir = arg_outdir;
            copt.algo = arg_algo;
            if (arg_cn > 40 && arg_algo == "thma-aggregated")
                std::cerr << "note: beyond n = 40 the aggregated layer engine becomes very "
                             "slow on short partitions; --algo oracle-pairing is checkpointed "
                             "and usually the practical choice\n";
            CensusReport rep = run_census(arg_cn, copt);
            std::cout << "census n=" << rep.n << ": total " << rep.total << ", zeros "
                      << rep.zeros << ", explained " << rep.explained() << ", unexplained "
                      << rep.unexplained.size() << "\n";
            std::cout << "first-match:";
            for (const auto& [tag, c] : rep.reason_histogram) std::cout << " " << tag << "=" << c;
            std::cout << "\noverlapping:";
            for (const auto& [tag, c] : rep.overlap_histogram) std::cout << " " << tag << "=" << c;
            std::cout << "\n";
            if (rep.unexplained.size() <= 40) {
                for (const auto& p : rep.unexplained) std::cout << "unexplained " << p.str() << "\n";
            }
            std::cout << "table: " << census_csv_path(arg_cn, copt.out_dir) << " ("
                      << rep.runtime_seconds << "s)\n";
            return 0;
        }
        if (*sc_verify) {
            if (arg_suite == "pleth-oracle") return verify_pleth_oracle(arg_maxmn);
            if (arg_suite == "sylow-oracle")
                return verify_sylow_oracle(arg_maxn, arg_extended, zopt);
            if (arg_suite == "closed-forms") return verify_closed_forms(arg_cf_max, zopt);
            if (arg_suite == "deboeck")
                return verify_deboeck(parse_range(arg_mrange), parse_range(arg_nrange));
            if (arg_suite == "stability") return verify_stability(arg_jmax);
            if (arg_suite == "star-closure") return verify_star_closure(arg_closure_n, zopt);
            if (arg_suite == "proof-machinery") return verify_proof_machinery(arg_maxdeg);
            if (arg_suite == "conjectures") return report_conjectures(arg_abmax, arg_k2c, zopt);
            std::cerr << "unknown suite: " << arg_suite << "\n";
            return 2;
        }
        if (*sc_cache) {
            std::string dir = zopt.cache_dir.empty() ? "." : zopt.cache_dir;
            if (arg_cache_op == "list") {
                for (const auto& e : std::filesystem::directory_iterator(dir)) {
                    if (e.path().extension() != ".zcache") continue;
                    std::ifstream f(e.path());
                    std::string header;
                    std::getline(f, header);
                    std::cout << e.path().string() << ": " << header << "\n";
                }
                return 0;
            }
            if (arg_cache_op == "clear") {
                for (const auto& e : std::filesystem::directory_iterator(dir))
                    if (e.path().extension() == ".zcache") std::filesystem::remove(e.path());
                return 0;
            }
            std::cerr << "unknown cache op: " << arg_cache_op << "\n";
            return 2;
        }
    } catch (const scale_exceeded& e) {
        std::cerr << "scale exceeded: " << e.what() << "\n";
        return 3;
    } catch (const overflow& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const VerifyFailure& e) {
        std::cerr << "FAIL: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

namespace {

int verify_proof_machinery(uint32_t max_deg) {
    // Lemma: (psi1 boxtimes psi2)/chi^gamma expands through pairs of divisions.
    {
        std::vector<Partition> shapes = {Partition{2, 1}, Partition{3}, Partition{1, 1},
                                         Partition{2, 2}, Partition{4, 1}};
        for (const auto& a : shapes)
            for (const auto& b : shapes) {
                if (a.size() + b.size() > max_deg) continue;
                IrrDecomposition pa = IrrDecomposition::irreducible(a, 2);
                pa.accumulate(disjoint_union(a, Partition()), -1); // mild virtual character
                IrrDecomposition pb = IrrDecomposition::irreducible(b);
                IrrDecomposition prod = boxtimes(pa, pb);
                for (uint32_t g = 0; g <= std::min<uint32_t>(3, a.size() + b.size()); ++g) {
                    for (const auto& gamma : partitions_of(g)) {
                        IrrDecomposition lhs = divide(prod, gamma);
                        IrrDecomposition rhs(prod.degree - g);
                        for (uint32_t t1 = 0; t1 <= g; ++t1)
                            for (const auto& g1 : partitions_of(t1))
                                for (const auto& g2 : partitions_of(g - t1)) {
                                    u64 c = lr_coefficient(gamma, g1, g2);
                                    if (!c) continue;
                                    IrrDecomposition term =
                                        boxtimes(divide(pa, g1), divide(pb, g2));
                                    for (const auto& [lam, d] : term.coeffs)
                                        rhs.accumulate(lam, (i64)c * d);
                                }
                        require(lhs == rhs, "Lemma 16.2-style division identity failed");
                    }
                }
            }
        std::cout << "proof-machinery: boxtimes/divide expansion ok\n";
    }
    // <chi^delta, chi^{nu/(1^k)}> = <chi^{delta/(1^{n-k})}, chi^{nuhat}>
    {
        for (uint32_t sz = 2; sz <= std::min(9u, max_deg); ++sz)
            for (const auto& nu : partitions_of(sz)) {
                uint32_t n = (uint32_t)nu.length();
                Partition nu_hat = strip_first_column(nu, n);
                for (uint32_t k = 0; k <= n; ++k) {
                    if (k > sz) continue;
                    std::vector<uint32_t> ones_k(k, 1), ones_nk(n - k, 1);
                    Partition col_k = Partition::from_sorted(std::move(ones_k));
                    Partition col_nk = Partition::from_sorted(std::move(ones_nk));
                    for (const auto& delta : partitions_of(sz - k)) {
                        if (delta.length() > n) continue;
                        u64 lhs = lr_coefficient(nu, delta, col_k);
                        u64 rhs = lr_coefficient(delta, nu_hat, col_nk);
                        require(lhs == rhs, "column-strip pairing identity failed at nu=" +
                                                nu.str() + " delta=" + delta.str());
                    }
                }
            }
        std::cout << "proof-machinery: column-strip pairing ok\n";
    }
    // rho^{(u)}_m / chi^{(1^{u-t})} = rho^{(t)}_m boxtimes rho^{(1^{u-t})}_{m-1}
    {
        for (uint32_t m = 2; m <= 4; ++m)
            for (uint32_t u = 1; m * u <= max_deg; ++u)
                for (uint32_t t = 0; t <= u; ++t) {
                    std::vector<uint32_t> col(u - t, 1);
                    Partition ones = Partition::from_sorted(std::move(col));
                    IrrDecomposition lhs = divide(rho(Partition{u}, m, 99), ones);
                    IrrDecomposition rhs =
                        boxtimes(rho(Partition{t}, m, 99), rho(ones, m - 1, 99));
                    require(lhs == rhs, "one-row division identity failed at m=" +
                                            std::to_string(m) + " u=" + std::to_string(u) +
                                            " t=" + std::to_string(t));
                }
        std::cout << "proof-machinery: one-row division ok\n";
    }
    // rho^lambda_m / chi^{(1^{n-k})} = sum_beta rho^beta_m boxtimes rho^{lambda'/beta'}_{m-1}
    {
        for (uint32_t m = 2; m <= 3; ++m)
            for (uint32_t n = 1; m * n <= max_deg; ++n)
                for (const auto& lam : partitions_of(n))
                    for (uint32_t k = 0; k < n; ++k) {
                        std::vector<uint32_t> col(n - k, 1);
                        Partition ones = Partition::from_sorted(std::move(col));
                        IrrDecomposition lhs = divide(rho(lam, m, 99), ones);
                        IrrDecomposition rhs(lhs.degree);
                        Partition lam_conj = lam.conjugate();
                        for (const auto& beta : partitions_of(k)) {
                            Partition bc = beta.conjugate();
                            if (!lam_conj.contains(bc)) continue;
                            IrrDecomposition term = boxtimes(
                                rho(beta, m, 99), rho(SkewShape(lam_conj, bc), m - 1, 99));
                            rhs += term;
                        }
                        require(lhs == rhs, "general division identity failed at lam=" +
                                                lam.str() + " m=" + std::to_string(m) +
                                                " k=" + std::to_string(k));
                    }
        std::cout << "proof-machinery: general division ok\n";
    }
    std::cout << "proof-machinery: PASS\n";
    return 0;
}

} // namespace
