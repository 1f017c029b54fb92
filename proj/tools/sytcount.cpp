// Command-line front end: skew SYT counts, coefficient tables, series
// coefficients, and the identity verification suites.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "syt/engine.hpp"
#include "syt/oracle.hpp"
#include "syt/polynomial.hpp"
#include "syt/series.hpp"

using json = nlohmann::ordered_json;
using namespace syt;

namespace {

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    // exactly one of these is populated
    std::optional<std::string> scalar;
    std::optional<std::vector<std::string>> list;
    std::optional<std::vector<std::vector<std::string>>> table;
    std::optional<bool> verified;
};

void render(const OutputRecord& rec, const std::string& format) {
    if (format == "json") {
        json j;
        j["command"] = rec.command;
        json params = json::object();
        for (const auto& [k, v] : rec.parameters)
            params[k] = v;
        j["parameters"] = params;
        if (rec.scalar)
            j["result"] = *rec.scalar;
        else if (rec.list)
            j["result"] = *rec.list;
        else if (rec.table)
            j["result"] = *rec.table;
        if (rec.verified)
            j["verified"] = *rec.verified;
        std::cout << j.dump() << "\n";
        return;
    }
    if (format == "tsv") {
        if (rec.scalar)
            std::cout << *rec.scalar << "\n";
        else if (rec.list) {
            for (std::size_t i = 0; i < rec.list->size(); ++i)
                std::cout << (i ? "\t" : "") << (*rec.list)[i];
            std::cout << "\n";
        } else if (rec.table) {
            for (const auto& row : *rec.table) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? "\t" : "") << row[i];
                std::cout << "\n";
            }
        }
        if (rec.verified)
            std::cout << (*rec.verified ? "verified" : "MISMATCH") << "\n";
        return;
    }
    // plain text
    std::cout << rec.command;
    for (const auto& [k, v] : rec.parameters)
        std::cout << " " << k << "=" << (v.empty() ? "\"\"" : v);
    std::cout << "\n";
    if (rec.scalar)
        std::cout << *rec.scalar << "\n";
    else if (rec.list) {
        for (std::size_t i = 0; i < rec.list->size(); ++i)
            std::cout << (i ? ", " : "") << (*rec.list)[i];
        std::cout << "\n";
    } else if (rec.table) {
        for (const auto& row : *rec.table) {
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "\t" : "") << row[i];
            std::cout << "\n";
        }
    }
    if (rec.verified)
        std::cout << (*rec.verified ? "verified: true" : "verified: FALSE")
                  << "\n";
}

struct IdentityResult {
    std::string name;
    bool pass;
    double seconds;
};

IdentityResult timed(const std::string& name, const std::function<bool()>& f) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = f();
    } catch (const InternalIdentityViolation& e) {
        std::cerr << name << ": " << e.what() << "\n";
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
                   .count();
    return {name, ok, s};
}

std::vector<IdentityResult> run_chebyshev_suite(long order) {
    std::vector<IdentityResult> out;
    out.push_back(timed("chebyshev-sum", [&] {
        for (long n = 1; n <= order; ++n)
            if (!verify_chebyshev_sum(static_cast<unsigned>(n)))
                return false;
        return true;
    }));
    out.push_back(timed("chebyshev-factorization", [&] {
        for (long m = 1; m <= std::max(order / 2, 1L); ++m)
            if (!verify_chebyshev_factorization(static_cast<unsigned>(m)))
                return false;
        return true;
    }));
    out.push_back(timed("parity-decomposition", [&] {
        return verify_parity_decomposition(order + 5, 20);
    }));
    return out;
}

std::vector<IdentityResult> run_series_suite(long order) {
    std::size_t n = static_cast<std::size_t>(order);
    std::vector<IdentityResult> out;
    out.push_back(timed("central-binomial", [&] {
        for (unsigned s = 0; s <= 5; ++s)
            if (!verify_central_binomial(s, n))
                return false;
        return true;
    }));
    out.push_back(timed("catalan-motzkin-bridge",
                        [&] { return verify_catalan_motzkin_bridge(n); }));
    out.push_back(timed("psi-hg-routes", [&] {
        for (unsigned k = 0; k <= 5; ++k)
            psi_h_g(k, n);
        return true;
    }));
    out.push_back(timed("psi-G3-routes", [&] {
        for (unsigned k = 1; k <= 5; ++k)
            psi_G3_one_row(k, n);
        return true;
    }));
    out.push_back(timed("psi-hf-routes", [&] {
        for (unsigned k = 1; k <= 6; ++k)
            psi_h_f(k, n);
        return true;
    }));
    out.push_back(timed("binomial-transform-lemma", [&] {
        unsigned long long state = 0x243f6a8885a308d3ULL;
        TruncatedSeries inv = TruncatedSeries::from_ints({1, -1}, 25).inverted();
        for (int trial = 0; trial < 50; ++trial) {
            TruncatedSeries a(25);
            for (std::size_t i = 0; i <= 12; ++i) {
                state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                a.set_coeff(i, static_cast<long>((state >> 33) % 19) - 9);
            }
            if (L_of_exp_times(a) != a.composed_with(inv.shifted_up(1)) * inv)
                return false;
        }
        return true;
    }));
    out.push_back(timed("S-expansion", [&] {
        BiSeries s = expand_S(12, 12);
        for (unsigned k = 0; k <= 12; ++k)
            if (s.coeff(k) != r_poly(k))
                return false;
        return true;
    }));
    out.push_back(timed("T-slice", [&] {
        expand_T_slice(8, 8);
        return true;
    }));
    out.push_back(timed("two-row-kernel", [&] {
        return verify_B_and_two_row_kernel(6, 6, std::min<std::size_t>(n, 15));
    }));
    return out;
}

std::vector<IdentityResult> run_theorem_suite(long order) {
    int n_max = static_cast<int>(std::min(order, 13L));
    std::vector<IdentityResult> out;
    out.push_back(timed("engine-vs-oracle", [&] {
        for (int m1 = 0; m1 <= 5; ++m1)
            for (int m2 = 0; m2 <= m1; ++m2) {
                Partition mu = Partition::make({m1, m2});
                for (int n = mu.size(); n <= n_max; ++n)
                    if (count_three_row(n, mu) != oracle_total(n, mu))
                        return false;
            }
        return true;
    }));
    out.push_back(timed("regev-difference", [&] {
        for (long n = 3; n <= 30; ++n)
            regev_difference(n);
        return true;
    }));
    return out;
}

std::vector<std::string> series_strings(const TruncatedSeries& s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i <= s.order(); ++i)
        out.push_back(s.coeff(i).get_str());
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-row skew SYT counts via Motzkin-number combinations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}));

    // count
    auto* count = app.add_subcommand("count", "Summed skew SYT count");
    long count_n = 0;
    std::string count_mu;
    bool use_oracle = false, cross_check = false;
    count->add_option("--n", count_n, "Size of the outer shape")->required();
    count->add_option("--mu", count_mu, "Inner shape, comma-separated");
    count->add_flag("--oracle", use_oracle, "Use brute-force counting");
    count->add_flag("--cross-check", cross_check, "Run both and compare");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force count only");
    long oracle_n = 0;
    std::string oracle_mu;
    int oracle_rows = 3;
    oracle_cmd->add_option("--n", oracle_n)->required();
    oracle_cmd->add_option("--mu", oracle_mu);
    oracle_cmd->add_option("--max-rows", oracle_rows);

    // table
    auto* table_cmd = app.add_subcommand("table", "Coefficient/count tables");
    std::string table_kind;
    unsigned kmax = 8;
    long table_n = 10;
    long nmax = 10;
    std::string table_mu;
    table_cmd->add_option("kind", table_kind, "rki | counts | motzkin")
        ->required()
        ->check(CLI::IsMember({"rki", "counts", "motzkin"}));
    table_cmd->add_option("--kmax", kmax);
    table_cmd->add_option("--n", table_n);
    table_cmd->add_option("--nmax", nmax);
    table_cmd->add_option("--mu", table_mu);

    // series
    auto* series_cmd = app.add_subcommand("series", "Series coefficients");
    std::string series_name;
    unsigned series_k = 1;
    long series_order = 10;
    series_cmd
        ->add_option("name", series_name, "motzkin | catalan | psi-hg | psi-G3")
        ->required()
        ->check(CLI::IsMember({"motzkin", "catalan", "psi-hg", "psi-G3"}));
    series_cmd->add_option("--k", series_k);
    series_cmd->add_option("--order", series_order)
        ->check(CLI::NonNegativeNumber);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Identity suites");
    std::string suite;
    long verify_order = 25;
    verify_cmd->add_option("suite", suite, "series | chebyshev | theorems | all")
        ->required()
        ->check(CLI::IsMember({"series", "chebyshev", "theorems", "all"}));
    verify_cmd->add_option("--order", verify_order)
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    }

    try {
        if (*count) {
            Partition mu = Partition::parse(count_mu);
            OutputRecord rec;
            rec.command = "count";
            rec.parameters = {{"n", std::to_string(count_n)},
                              {"mu", mu.to_string()}};
            if (cross_check) {
                mpz_class engine = count_three_row(count_n, mu);
                mpz_class brute =
                    oracle_total(static_cast<int>(count_n), mu);
                rec.scalar = engine.get_str();
                rec.verified = engine == brute;
                render(rec, format);
                return *rec.verified ? 0 : 1;
            }
            mpz_class value =
                use_oracle ? oracle_total(static_cast<int>(count_n), mu)
                           : count_three_row(count_n, mu);
            rec.scalar = value.get_str();
            render(rec, format);
            return 0;
        }

        if (*oracle_cmd) {
            Partition mu = Partition::parse(oracle_mu);
            OutputRecord rec;
            rec.command = "oracle";
            rec.parameters = {{"n", std::to_string(oracle_n)},
                              {"mu", mu.to_string()},
                              {"max_rows", std::to_string(oracle_rows)}};
            rec.scalar =
                oracle_total(static_cast<int>(oracle_n), mu, oracle_rows)
                    .get_str();
            render(rec, format);
            return 0;
        }

        if (*table_cmd) {
            OutputRecord rec;
            rec.command = "table";
            rec.parameters = {{"kind", table_kind}};
            if (table_kind == "rki") {
                rec.parameters.emplace_back("kmax", std::to_string(kmax));
                std::vector<std::vector<std::string>> rows;
                for (const auto& row : coefficient_table(kmax)) {
                    std::vector<std::string> r;
                    for (const auto& v : row)
                        r.push_back(v.get_str());
                    rows.push_back(std::move(r));
                }
                rec.table = std::move(rows);
            } else if (table_kind == "motzkin") {
                rec.parameters.emplace_back("n", std::to_string(table_n));
                std::vector<std::string> vals;
                for (long i = 0; i <= table_n; ++i)
                    vals.push_back(motzkin(i).get_str());
                rec.list = std::move(vals);
            } else { // counts
                Partition mu = Partition::parse(table_mu);
                rec.parameters.emplace_back("nmax", std::to_string(nmax));
                rec.parameters.emplace_back("mu", mu.to_string());
                std::vector<std::vector<std::string>> rows;
                for (long n = mu.size(); n <= nmax; ++n)
                    rows.push_back(
                        {std::to_string(n), count_three_row(n, mu).get_str()});
                rec.table = std::move(rows);
            }
            render(rec, format);
            return 0;
        }

        if (*series_cmd) {
            std::size_t order = static_cast<std::size_t>(series_order);
            OutputRecord rec;
            rec.command = "series";
            rec.parameters = {{"name", series_name},
                              {"order", std::to_string(series_order)}};
            TruncatedSeries s(0);
            if (series_name == "motzkin")
                s = motzkin_series(order);
            else if (series_name == "catalan")
                s = catalan_series(order);
            else if (series_name == "psi-hg") {
                rec.parameters.emplace_back("k", std::to_string(series_k));
                s = psi_h_g(series_k, order);
            } else {
                rec.parameters.emplace_back("k", std::to_string(series_k));
                s = psi_G3_one_row(series_k, order);
            }
            rec.list = series_strings(s);
            render(rec, format);
            return 0;
        }

        // verify
        std::vector<IdentityResult> results;
        if (suite == "series" || suite == "all") {
            auto r = run_series_suite(verify_order);
            results.insert(results.end(), r.begin(), r.end());
        }
        if (suite == "chebyshev" || suite == "all") {
            auto r = run_chebyshev_suite(verify_order);
            results.insert(results.end(), r.begin(), r.end());
        }
        if (suite == "theorems" || suite == "all") {
            auto r = run_theorem_suite(verify_order);
            results.insert(results.end(), r.begin(), r.end());
        }
        OutputRecord rec;
        rec.command = "verify";
        rec.parameters = {{"suite", suite},
                          {"order", std::to_string(verify_order)}};
        bool all_pass = true;
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3fs", r.seconds);
            rows.push_back({r.name, r.pass ? "pass" : "FAIL", buf});
        }
        rec.table = std::move(rows);
        rec.verified = all_pass;
        render(rec, format);
        return all_pass ? 0 : 1;
    } catch (const NotWeaklyDecreasing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TooManyRows& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InnerTooLong& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
