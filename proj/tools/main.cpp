#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tridyck/aqt.hpp"
#include "tridyck/conjecture.hpp"
#include "tridyck/lattice.hpp"
#include "tridyck/schur.hpp"
#include "tridyck/simsym.hpp"
#include "tridyck/statistics.hpp"
#include "tridyck/verify.hpp"

using namespace tridyck;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// triangular | topdown | sweep | rowregular:<i>
StandardTableau make_tableau(const Partition& lam, const std::string& kind) {
    if (kind == "triangular") return triangular_tableau(lam);
    if (kind == "topdown") return top_down_tableau(lam);
    if (kind == "sweep") return triangular_tableau_sweep(lam);
    if (kind.rfind("rowregular:", 0) == 0) {
        if (lam.length() > 2) throw UsageError("rowregular needs a 2-partition");
        return row_regular_tableau(lam[0], lam[1], std::stoi(kind.substr(11)));
    }
    if (!kind.empty() && kind.front() == '[') {
        auto t = StandardTableau::parse(kind);
        if (!(t.shape() == lam)) throw UsageError("tableau shape differs from lambda");
        return t;
    }
    throw UsageError("unknown tableau kind '" + kind + "'");
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangular Dyck paths, sim statistics and nu-Tamari intervals"};
    app.require_subcommand(1);

    std::string lam_text, mu_text, kind = "triangular", dot_file, suite, json_file, shape_text;
    int size = 0, max_size = 0;
    unsigned threads = 0;
    bool as_json = false, count_only = false, list = false, want_schur = false, want_schur3 = false,
         want_stats = false, slow = false;

    auto* c_tri = app.add_subcommand("check-triangular", "Slope interval and triangularity of a partition");
    c_tri->add_option("lambda", lam_text, "partition, e.g. 4,3,1")->required();
    c_tri->add_flag("--json", as_json);

    auto* c_enum = app.add_subcommand("enumerate-triangular", "Triangular partitions of a given size");
    c_enum->add_option("--size", size)->required()->check(CLI::NonNegativeNumber);
    c_enum->add_flag("--count", count_only);
    c_enum->add_flag("--json", as_json);

    auto* c_stats = app.add_subcommand("stats", "area, sim and deficit of a path");
    c_stats->add_option("--lambda", lam_text)->required();
    c_stats->add_option("--mu", mu_text)->required();
    c_stats->add_option("--tableau", kind, "triangular|topdown|sweep|rowregular:<i>|[..][..]");

    auto* c_tab = app.add_subcommand("tableau", "Print a tableau of a shape");
    c_tab->add_option("--lambda", lam_text)->required();
    c_tab->add_option("--kind", kind, "triangular|topdown|sweep|rowregular:<i>");
    c_tab->add_flag("--json", as_json);

    auto* c_aqt = app.add_subcommand("aqt", "A_theta(q,t) and its Schur expansion");
    c_aqt->add_option("--lambda", lam_text)->required();
    c_aqt->add_option("--tableau", kind);
    c_aqt->add_flag("--schur", want_schur);
    c_aqt->add_flag("--json", as_json);

    auto* c_ss = app.add_subcommand("simsym", "Sim-sym tableaux by brute force");
    c_ss->add_option("--lambda", lam_text)->required();
    auto* f_count = c_ss->add_flag("--count", count_only);
    c_ss->add_flag("--list", list)->excludes(f_count);
    c_ss->add_flag("--json", as_json);

    auto* c_lat = app.add_subcommand("lattice", "nu-Tamari lattice of a triangular partition");
    c_lat->add_option("--lambda", lam_text)->required();
    c_lat->add_option("--dot", dot_file, "write the Hasse diagram in DOT format");
    c_lat->add_flag("--stats", want_stats);
    c_lat->add_flag("--json", as_json);

    std::string iv_kind = "topdown";
    auto* c_iv = app.add_subcommand("intervals", "Interval polynomial sum q^dist t^sim");
    c_iv->add_option("--lambda", lam_text)->required();
    c_iv->add_option("--tableau", iv_kind);
    c_iv->add_flag("--schur3", want_schur3, "positive expansion in s_nu(q,t,1) and the conjecture check");
    c_iv->add_flag("--json", as_json);

    auto* c_ver = app.add_subcommand("verify", "Run a verification suite");
    c_ver->add_option("--suite", suite, "suite name or 'all'")->required();
    c_ver->add_option("--max-size", max_size)->check(CLI::PositiveNumber);
    c_ver->add_option("--shape", shape_text, "single shape for conjecture-lattice");
    c_ver->add_option("--threads", threads);
    c_ver->add_flag("--slow", slow);
    c_ver->add_option("--json", json_file, "write the report to FILE ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*c_tri) {
            const Partition lam = Partition::parse(lam_text);
            const auto b = slope_bounds(lam);
            const bool tri = is_triangular(lam);
            if (as_json)
                emit({{"lambda", lam.parts()}, {"triangular", tri}, {"lower", to_string(b.lower)}, {"upper", to_string(b.upper)}});
            else
                std::cout << "(" << lam.str() << ") " << (tri ? "triangular" : "not triangular") << ", slopes ("
                          << to_string(b.lower) << ", " << to_string(b.upper) << ")\n";
            return tri ? 0 : 1;
        }
        if (*c_enum) {
            const auto all = enumerate_triangular_partitions(size);
            if (as_json) {
                json j = json::array();
                for (const auto& p : all) j.push_back(p.parts());
                emit(count_only ? json(all.size()) : j);
            } else if (count_only) {
                std::cout << all.size() << '\n';
            } else {
                for (const auto& p : all) std::cout << p.str() << '\n';
            }
            return 0;
        }
        if (*c_stats) {
            const Partition lam = Partition::parse(lam_text);
            const Partition mu = Partition::parse(mu_text);
            const auto s = statistics(make_tableau(lam, kind), mu);
            emit({{"area", s.area}, {"sim", s.sim}, {"deficit", s.deficit}});
            return 0;
        }
        if (*c_tab) {
            const auto t = make_tableau(Partition::parse(lam_text), kind);
            if (as_json)
                emit({{"shape", t.shape().parts()}, {"rows", t.rows()}});
            else
                for (auto r = t.rows().rbegin(); r != t.rows().rend(); ++r) {
                    for (int v : *r) std::cout << v << ' ';
                    std::cout << '\n';
                }
            return 0;
        }
        if (*c_aqt) {
            const auto theta = make_tableau(Partition::parse(lam_text), kind);
            const MultiPoly p = a_theta_polynomial(theta);
            std::optional<SchurExpansion> e;
            if (want_schur) e = decompose_schur_2var(p);
            if (as_json) {
                json j{{"tableau", theta.str()}, {"polynomial", p.to_json()}};
                if (e) j["schur"] = e->to_json();
                emit(j);
            } else {
                std::cout << p.str() << '\n';
                if (e) std::cout << e->str() << '\n';
            }
            return 0;
        }
        if (*c_ss) {
            const auto all = enumerate_sim_sym(Partition::parse(lam_text));
            if (as_json) {
                json j = json::array();
                for (const auto& t : all) j.push_back(t.str());
                emit(count_only ? json(all.size()) : json{{"count", all.size()}, {"tableaux", j}});
            } else {
                std::cout << all.size() << '\n';
                if (list)
                    for (const auto& t : all) std::cout << t.str() << '\n';
            }
            return 0;
        }
        if (*c_lat) {
            const Lattice L(Partition::parse(lam_text));
            if (!dot_file.empty()) {
                std::ofstream out(dot_file);
                if (!out) throw UsageError("cannot write " + dot_file);
                out << to_dot(L);
            }
            if (as_json) {
                json j = to_json(L);
                if (want_stats) j["intervals"] = L.interval_count();
                emit(j);
            } else {
                std::cout << "nodes " << L.size() << "\ncovers " << L.covers().size() << "\nintervals "
                          << L.interval_count() << '\n';
            }
            return 0;
        }
        if (*c_iv) {
            const Partition lam = Partition::parse(lam_text);
            const MultiPoly p = interval_polynomial(lam, make_tableau(lam, iv_kind));
            if (!want_schur3) {
                if (as_json)
                    emit({{"polynomial", p.to_json()}, {"value_at_1", p.sum_of_coefficients()}});
                else
                    std::cout << p.str() << '\n';
                return 0;
            }
            if (iv_kind != "topdown") throw UsageError("--schur3 uses the top-down tableau");
            const ConjectureReport r = check_lattice_conjecture(lam);
            if (as_json) {
                emit(r.to_json());
            } else {
                std::cout << p.str() << '\n' << to_string(r.status) << ": " << r.details << '\n';
            }
            return r.status == Status::fail ? 1 : 0;
        }
        if (*c_ver) {
            SuiteBounds b;
            b.max_size = max_size;
            b.slow = slow;
            b.threads = threads;
            if (!shape_text.empty()) b.shape = Partition::parse(shape_text);
            std::vector<std::string> names;
            if (suite == "all")
                names = suite_names();
            else
                names.push_back(suite);
            json all = json::array();
            bool ok = true;
            for (const auto& name : names) {
                const VerificationReport r = run_suite(name, b);
                ok = ok && r.passed();
                if (json_file.empty() || json_file != "-") std::cout << r.table();
                std::cerr << name << ": " << r.wall_seconds << " s\n";
                all.push_back(r.to_json());
            }
            if (!json_file.empty()) {
                const json out = names.size() == 1 ? all[0] : all;
                if (json_file == "-") {
                    emit(out);
                } else {
                    std::ofstream f(json_file);
                    if (!f) throw UsageError("cannot write " + json_file);
                    f << out.dump(2) << '\n';
                }
            }
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == Errc::internal_error ? 1 : kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
