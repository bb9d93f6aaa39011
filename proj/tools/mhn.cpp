#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "mhn/json_io.hpp"
#include "mhn/parallel.hpp"

using namespace mhn;
using nlohmann::json;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::optional<std::ofstream> file;
    std::ostream& stream() { return file ? *file : std::cout; }

    static Output open(const std::string& path) {
        Output o;
        if (!path.empty()) {
            o.file.emplace(path);
            if (!*o.file) throw CLI::ValidationError("--output", "cannot open " + path);
        }
        return o;
    }
};

struct HurwitzRow {
    int g, b;
    Partition mu;
    Rational disconnected, connected;
    std::optional<Rational> oracle_disc, oracle_conn;
};

int run_hurwitz(int d_max, int b_max, bool with_oracle, const std::string& format,
                const std::string& out_path, unsigned workers) {
    std::vector<HurwitzRow> rows;
    for (int d = 1; d <= d_max; ++d)
        for (const auto& mu : partitions_of(d))
            for (int b = (d + mu.length()) % 2; b <= b_max; b += 2) {
                HurwitzRow r;
                r.b = b;
                r.g = (b + 2 - d - mu.length()) / 2;
                r.mu = mu;
                rows.push_back(std::move(r));
            }
    HurwitzTable table(d_max, b_max);
    parallel_for(rows.size(), workers, [&](size_t i) {
        HurwitzRow& r = rows[i];
        r.disconnected = disconnected_hurwitz(HurwitzIndex(r.g, r.mu));
        r.connected = table.connected_coeff(r.mu.size(), r.b, r.mu);
        if (with_oracle && r.mu.size() <= 6 && r.b <= 6) {
            r.oracle_disc = oracle_disconnected(r.mu, r.b);
            r.oracle_conn = oracle_connected(r.mu, r.b);
        }
    });

    Output out = Output::open(out_path);
    std::ostream& os = out.stream();
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json j{{"g", r.g},
                   {"mu", r.mu.to_string()},
                   {"b", r.b},
                   {"disconnected", to_json(r.disconnected)},
                   {"connected", to_json(r.connected)}};
            if (r.oracle_disc) j["oracle_disconnected"] = to_json(*r.oracle_disc);
            if (r.oracle_conn) j["oracle_connected"] = to_json(*r.oracle_conn);
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        os << "g,mu,b,disconnected,connected";
        if (with_oracle) os << ",oracle_disconnected,oracle_connected";
        os << "\n";
        for (const auto& r : rows) {
            os << r.g << ",\"" << r.mu.to_string() << "\"," << r.b << "," << r.disconnected.to_string()
               << "," << r.connected.to_string();
            if (with_oracle) {
                os << "," << (r.oracle_disc ? r.oracle_disc->to_string() : "")
                   << "," << (r.oracle_conn ? r.oracle_conn->to_string() : "");
            }
            os << "\n";
        }
    } else {
        for (const auto& r : rows) {
            os << "g=" << r.g << " mu=" << r.mu.to_string() << " b=" << r.b
               << " disconnected=" << r.disconnected.to_string()
               << " connected=" << r.connected.to_string();
            if (r.oracle_disc)
                os << " oracle_disconnected=" << r.oracle_disc->to_string()
                   << " oracle_connected=" << r.oracle_conn->to_string();
            os << "\n";
        }
    }
    return kExitVerified;
}

int emit_report(const VerificationReport& rep, const std::string& out_path) {
    Output out = Output::open(out_path);
    out.stream() << to_json(rep).dump(2) << "\n";
    return rep.verified ? kExitVerified : kExitCounterexample;
}

const std::vector<std::pair<int, int>> kStableSet = {{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}};
const std::vector<std::pair<int, int>> kCompareSet = {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                                      {1, 1}, {1, 2}, {2, 1}};
const std::vector<std::pair<int, int>> kLoopLevels = {{0, 1}, {0, 2}, {0, 3},
                                                      {1, 0}, {1, 1}, {2, 0}};

bool in_set(const std::vector<std::pair<int, int>>& set, int g, int n) {
    return std::find(set.begin(), set.end(), std::make_pair(g, n)) != set.end();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monotone Hurwitz numbers: exact tables, identity verifiers, topological recursion"};
    app.require_subcommand(1);

    int d_max = 4, b_max = 4, n_max = 10, g = 0, n = 3, a_max = 4;
    long order = 0;
    unsigned workers = 0;
    bool with_oracle = false;
    std::string format = "text", out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text|csv|json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--output", out_path, "write to file instead of stdout");
        cmd->add_option("--workers", workers, "worker threads (0 = hardware)");
    };

    CLI::App* hurwitz = app.add_subcommand("hurwitz", "tabulate disconnected/connected numbers");
    hurwitz->add_option("--dmax", d_max, "degree cap (<= 8)");
    hurwitz->add_option("--bmax", b_max, "transposition cap (<= 8)");
    hurwitz->add_flag("--with-oracle", with_oracle, "include brute-force oracle columns (d,b <= 6)");
    add_common(hurwitz);

    CLI::App* verify = app.add_subcommand("verify", "run an exact identity verifier");
    verify->require_subcommand(1);
    CLI::App* vcj = verify->add_subcommand("cut-and-join", "coefficientwise cut-and-join equation");
    vcj->add_option("--dmax", d_max, "s-degree cap (<= 8)");
    vcj->add_option("--bmax", b_max, "t-degree cap (<= 8)");
    add_common(vcj);
    CLI::App* vlem = verify->add_subcommand("lemma", "content/hook corner-removal lemma");
    vlem->add_option("--nmax", n_max, "diagram size cap (<= 20)");
    add_common(vlem);
    CLI::App* vhan = verify->add_subcommand("han", "g-function polynomial identity");
    vhan->add_option("--nmax", n_max, "diagram size cap (<= 20)");
    add_common(vhan);
    CLI::App* vw3 = verify->add_subcommand("w3", "w^3-coefficient reduction of the g-function identity");
    vw3->add_option("--nmax", n_max, "diagram size cap (<= 20)");
    add_common(vw3);
    CLI::App* vloop = verify->add_subcommand("loop", "quadratic loop equation at the branch point");
    vloop->add_option("--g", g, "genus of the certified level");
    vloop->add_option("--n", n, "spectator count of the certified level");
    vloop->add_option("--order", order, "working Laurent order (0 = automatic)");
    bool loop_all = false;
    vloop->add_flag("--all", loop_all, "sweep every computed level");
    add_common(vloop);

    CLI::App* tr = app.add_subcommand("tr", "topological recursion on the monotone curve");
    tr->require_subcommand(1);
    CLI::App* tro = tr->add_subcommand("omega", "emit a pole-basis form");
    tro->add_option("--g", g, "genus")->required();
    tro->add_option("--n", n, "number of points")->required();
    add_common(tro);
    CLI::App* trc = tr->add_subcommand("compare", "check omega expansions against Hurwitz numbers");
    trc->add_option("--g", g, "genus")->required();
    trc->add_option("--n", n, "number of points")->required();
    trc->add_option("--amax", a_max, "exponent cap (<= 5)");
    add_common(trc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*hurwitz) {
            if (d_max < 1 || d_max > 8 || b_max < 0 || b_max > 8)
                throw std::invalid_argument("budget: hurwitz sweeps allow 1 <= dmax <= 8, 0 <= bmax <= 8");
            return run_hurwitz(d_max, b_max, with_oracle, format, out_path, workers);
        }
        if (*vcj) {
            if (d_max < 1 || d_max > 8 || b_max < 0 || b_max > 8)
                throw std::invalid_argument("budget: cut-and-join allows 1 <= dmax <= 8, 0 <= bmax <= 8");
            return emit_report(verify_cut_and_join(d_max, b_max), out_path);
        }
        if (*vlem) {
            if (n_max < 0 || n_max > 20)
                throw std::invalid_argument("budget: identity sweeps allow nmax <= 20");
            return emit_report(verify_content_lemma(n_max, workers), out_path);
        }
        if (*vhan) {
            if (n_max < 0 || n_max > 20)
                throw std::invalid_argument("budget: identity sweeps allow nmax <= 20");
            return emit_report(verify_han_identity(n_max, workers), out_path);
        }
        if (*vw3) {
            if (n_max < 0 || n_max > 20)
                throw std::invalid_argument("budget: identity sweeps allow nmax <= 20");
            return emit_report(verify_w3_reduction(n_max, workers), out_path);
        }
        if (*vloop) {
            TopologicalRecursion engine;
            auto run_level = [&](int gg, int nn) {
                long o = order > 0 ? order : 6L * gg + 2L * nn + 24;
                return check_quadratic_loop(engine, gg, nn, o);
            };
            if (loop_all) {
                json arr = json::array();
                bool all_ok = true;
                for (auto [gg, nn] : kLoopLevels) {
                    auto rep = run_level(gg, nn);
                    all_ok = all_ok && rep.verified;
                    arr.push_back(to_json(rep));
                }
                Output out = Output::open(out_path);
                out.stream() << arr.dump(2) << "\n";
                return all_ok ? kExitVerified : kExitCounterexample;
            }
            if (!in_set(kLoopLevels, g, n))
                throw std::invalid_argument("budget: loop levels are (0,1) (0,2) (0,3) (1,0) (1,1) (2,0)");
            return emit_report(run_level(g, n), out_path);
        }
        if (*tro) {
            if (in_set(kCompareSet, g, n) && !in_set(kStableSet, g, n))
                throw std::invalid_argument("unstable case (g,n): use `tr compare` for it");
            if (!in_set(kStableSet, g, n))
                throw std::invalid_argument("budget: omega supports (0,3) (0,4) (1,1) (1,2) (2,1)");
            TopologicalRecursion engine;
            Output out = Output::open(out_path);
            out.stream() << to_json(engine.omega(g, n)).dump(2) << "\n";
            return kExitVerified;
        }
        if (*trc) {
            if (!in_set(kCompareSet, g, n))
                throw std::invalid_argument(
                    "budget: compare supports (0,1) (0,2) (0,3) (0,4) (1,1) (1,2) (2,1)");
            if (a_max < 1 || a_max > 5) throw std::invalid_argument("budget: amax <= 5");
            TopologicalRecursion engine;
            HurwitzTable table(n * a_max, 2 * g - 2 + n * a_max + n, a_max);
            return emit_report(compare_with_hurwitz(engine, table, g, n, a_max), out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
