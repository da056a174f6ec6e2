#include "tridyck/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "tridyck/aqt.hpp"
#include "tridyck/conjecture.hpp"
#include "tridyck/reference.hpp"
#include "tridyck/schur.hpp"
#include "tridyck/simsym.hpp"
#include "tridyck/statistics.hpp"
#include "tridyck/twopart.hpp"

namespace tridyck {

namespace {

using Job = std::function<std::vector<CaseResult>()>;

std::vector<CaseResult> run_jobs(const std::vector<std::pair<std::string, Job>>& jobs, unsigned threads) {
    std::vector<std::vector<CaseResult>> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < jobs.size();) {
            try {
                results[k] = jobs[k].second();
            } catch (const std::exception& e) {
                results[k] = {{jobs[k].first, Status::fail, std::string("exception: ") + e.what()}};
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<CaseResult> out;
    for (auto& r : results)
        for (auto& c : r) out.push_back(std::move(c));
    return out;
}

std::string pname(const Partition& p) { return "(" + p.str() + ")"; }

CaseResult verdict(std::string input, bool pass, std::string details) {
    return {std::move(input), pass ? Status::pass : Status::fail, std::move(details)};
}

std::vector<Partition> triangular_up_to(int max_size) {
    std::vector<Partition> out;
    for (int k = 1; k <= max_size; ++k)
        for (auto& p : enumerate_triangular_partitions(k)) out.push_back(std::move(p));
    return out;
}

std::vector<std::pair<int, int>> two_parts_up_to(int max_m, int min_n) {
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= max_m; ++m)
        for (int n = min_n; n <= m; ++n)
            if (is_triangular(Partition{m, n})) out.emplace_back(m, n);
    return out;
}

std::string mn(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

int pick(const SuiteBounds& b, int normal, int slow) { return b.max_size > 0 ? b.max_size : (b.slow ? slow : normal); }

using Jobs = std::vector<std::pair<std::string, Job>>;

Jobs triangularity_jobs(const SuiteBounds& b) {
    Jobs jobs;
    for (int m = 1; m <= pick(b, 30, 60); ++m)
        jobs.emplace_back("m=" + std::to_string(m), [m] {
            std::string bad;
            for (int n = 0; n <= m; ++n)
                if (is_triangular(Partition{m, n}) != (n <= (m + 1) / 2)) bad += mn(m, n) + " ";
            return std::vector<CaseResult>{verdict("m=" + std::to_string(m), bad.empty(),
                                                   bad.empty() ? "n <= ceil(m/2)" : "mismatch at " + bad)};
        });
    return jobs;
}

Jobs deficit_jobs(const SuiteBounds& b) {
    Jobs jobs;
    for (const auto& lam : triangular_up_to(pick(b, 12, 16)))
        jobs.emplace_back(pname(lam), [lam] {
            const StandardTableau theta = triangular_tableau(lam);
            int checked = 0;
            std::string bad;
            for (const auto& mu : enumerate_subpartitions(lam)) {
                std::set<Cell> nonsim;
                const auto sim = slope_similar_cells(TriangularDyckPath(lam, mu));
                for (const auto& c : mu.cells())
                    if (!sim.count(c)) nonsim.insert(c);
                ++checked;
                if (deficit_cells(theta, mu) != nonsim && bad.size() < 80) bad += pname(mu) + " ";
            }
            if (!(triangular_tableau_sweep(lam) == theta)) bad += "sweep tableau differs";
            return std::vector<CaseResult>{
                verdict(pname(lam), bad.empty(), bad.empty() ? std::to_string(checked) + " subpartitions" : bad)};
        });
    return jobs;
}

Jobs positivity_jobs(const SuiteBounds& b) {
    Jobs jobs;
    for (const auto& lam : triangular_up_to(pick(b, 10, 14)))
        jobs.emplace_back(pname(lam), [lam] {
            const auto e = decompose_schur_2var(a_lambda_polynomial(lam));
            return std::vector<CaseResult>{verdict(pname(lam), e.is_positive(), e.compact())};
        });
    return jobs;
}

Jobs closed_form_jobs(const SuiteBounds& b) {
    Jobs jobs;
    for (auto [m, n] : two_parts_up_to(pick(b, 16, 24), 0))
        jobs.emplace_back(mn(m, n), [m, n] {
            const Partition lam{m, n};
            const SchurExpansion want = closed_form_a_lambda_2part(m, n);
            std::string bad;
            if (!(decompose_schur_2var(a_lambda_polynomial(lam)) == want)) bad += "A_lambda; ";
            const int subparts = static_cast<int>(enumerate_subpartitions(lam).size());
            for (int i = 1; n > 0 && i <= max_row_regular_index(m, n); ++i) {
                const StandardTableau theta = row_regular_tableau(m, n, i);
                if (!(decompose_schur_2var(a_theta_polynomial(theta)) == want)) bad += "A_theta i=" + std::to_string(i) + "; ";
                std::set<Partition> image;
                for (int d = 0; d <= std::min(n, m - n); ++d)
                    for (int a = d; a <= m + n - 2 * d; ++a) {
                        const Partition mu = imp_path(m, n, i, d, a);
                        const auto s = statistics(theta, mu);
                        if (s.deficit != d || s.area != a) bad += "imp i=" + std::to_string(i) + "; ";
                        image.insert(mu);
                    }
                if (static_cast<int>(image.size()) != subparts) bad += "imp not bijective i=" + std::to_string(i) + "; ";
                const bool top_on_upper = theta.cell_of(m + n).row == 1;
                if (top_on_upper != (i == max_row_regular_index(m, n))) bad += "maximal label i=" + std::to_string(i) + "; ";
            }
            return std::vector<CaseResult>{verdict(mn(m, n), bad.empty(), bad.empty() ? want.str() : bad)};
        });
    return jobs;
}

// Properties every sim-sym tableau should have; returns a description of the first violation.
std::string simsym_lemmas(const StandardTableau& theta) {
    const Partition& lam = theta.shape();
    std::set<std::pair<int, int>> seen;
    std::set<int> deficit_one_sizes;
    for (const auto& mu : enumerate_subpartitions(lam)) {
        const auto s = statistics(theta, mu);
        if (s.area < s.deficit || s.sim < s.deficit) return "area/sim below deficit at " + pname(mu);
        if (!seen.insert({s.area, s.sim}).second) return "repeated (area,sim) at " + pname(mu);
        if (s.deficit == 1) deficit_one_sizes.insert(mu.size());
    }
    if (std::min(lam[1], lam[0] - lam[1]) >= 1)
        for (int l = 2; l < lam.size(); ++l)
            if (!deficit_one_sizes.count(l)) return "no deficit-1 subpartition of size " + std::to_string(l);
    return {};
}

Jobs simsym_jobs(const SuiteBounds& b) {
    Jobs jobs;
    for (auto [m, n] : two_parts_up_to(pick(b, 12, 14), 1))
        jobs.emplace_back(mn(m, n), [m, n] {
            const SimSymReport r = verify_simsym_characterization(m, n);
            std::string bad;
            for (const auto& t : r.sim_sym)
                if (auto why = simsym_lemmas(t); !why.empty()) bad += t.str() + ": " + why + "; ";
            std::string details = std::to_string(r.sim_sym.size()) + " sim-sym";
            if (!r.pass) details += ", expected " + std::to_string(r.expected.size());
            if (!bad.empty()) details += "; " + bad;
            return std::vector<CaseResult>{verdict(mn(m, n), r.pass && bad.empty(), details)};
        });
    return jobs;
}

Jobs qtr_jobs(const SuiteBounds& b) {
    Jobs jobs;
    const int limit = pick(b, 20, 30);
    for (auto [m, n] : two_parts_up_to(limit, 0))
        if (m + n <= limit) jobs.emplace_back(mn(m, n), [m, n] { return std::vector<CaseResult>{check_two_row_intervals(m, n)}; });
    return jobs;
}

Jobs conjecture_jobs(const SuiteBounds& b) {
    std::vector<Partition> shapes;
    if (b.shape) {
        shapes.push_back(*b.shape);
    } else {
        shapes = triangular_up_to(pick(b, 15, 21));
    }
    Jobs jobs;
    for (const auto& lam : shapes)
        jobs.emplace_back(pname(lam), [lam] { return std::vector<CaseResult>{check_lattice_conjecture(lam).to_case()}; });
    return jobs;
}

Jobs structure_jobs(const SuiteBounds& b) {
    Jobs jobs;
    for (auto [m, n] : two_parts_up_to(pick(b, 12, 20), 0))
        jobs.emplace_back(mn(m, n), [m, n] { return check_structure_2part(m, n); });
    return jobs;
}

const std::map<std::string, Jobs (*)(const SuiteBounds&)>& registry() {
    static const std::map<std::string, Jobs (*)(const SuiteBounds&)> r{
        {"triangularity", triangularity_jobs},   {"deficit-equals-nonsim", deficit_jobs},
        {"schur-positivity-qt", positivity_jobs}, {"2part-closed-form", closed_form_jobs},
        {"2part-simsym", simsym_jobs},            {"2part-qtr", qtr_jobs},
        {"conjecture-lattice", conjecture_jobs},  {"structure-2part", structure_jobs},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"triangularity", "deficit-equals-nonsim", "schur-positivity-qt",
                                                "2part-closed-form", "2part-simsym", "2part-qtr",
                                                "conjecture-lattice", "structure-2part"};
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteBounds& bounds) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error(Errc::unknown_suite, name);
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.suite = name;
    r.cases = run_jobs(it->second(bounds), bounds.threads);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

int VerificationReport::count(Status s) const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [s](const auto& c) { return c.status == s; }));
}

bool VerificationReport::passed() const { return count(Status::fail) == 0; }

nlohmann::json VerificationReport::to_json(bool with_timing) const {
    nlohmann::json j{{"suite", suite}};
    j["cases"] = nlohmann::json::array();
    for (const auto& c : cases) j["cases"].push_back(c.to_json());
    j["summary"] = {{"pass", count(Status::pass)},
                    {"fail", count(Status::fail)},
                    {"not-applicable", count(Status::not_applicable)},
                    {"reference-uncertain", count(Status::reference_uncertain)}};
    if (with_timing) j["wall_seconds"] = wall_seconds;
    return j;
}

std::string VerificationReport::table() const {
    std::ostringstream os;
    std::size_t w = 5;
    for (const auto& c : cases) w = std::max(w, c.input.size());
    for (const auto& c : cases) {
        os << to_string(c.status);
        for (std::size_t k = std::string(to_string(c.status)).size(); k < 20; ++k) os << ' ';
        os << c.input;
        for (std::size_t k = c.input.size(); k < w + 2; ++k) os << ' ';
        os << c.details << '\n';
    }
    os << suite << ": " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, "
       << count(Status::not_applicable) << " not-applicable, " << count(Status::reference_uncertain)
       << " reference-uncertain\n";
    return os.str();
}

}  // namespace tridyck
