// Acceptance suite: runs every gate criterion exactly and prints one
// pass/fail line per criterion.  Exits nonzero when any criterion fails.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "hc/serialize.hpp"
#include "hc/supermodule.hpp"
#include "hc/tableaux.hpp"
#include "hc/verify.hpp"

using namespace hc;

namespace {

std::string g_cli_path;
int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& fn) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("[%s] criterion %2d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL",
                number, title.c_str(), static_cast<long long>(ms),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

WeightVector wv(std::vector<int> entries, std::uint32_t p = 0) {
    WeightVector w;
    w.p = p;
    w.entries = std::move(entries);
    return w;
}

const std::vector<std::uint32_t> kPrimes = {0, 3, 5, 7};

int worker_count() {
    if (const char* env = std::getenv("HC_JOBS")) return std::max(1, std::atoi(env));
    return std::max(1u, std::thread::hardware_concurrency());
}

struct LabelTask {
    std::uint32_t p;
    int n;
    ClassLabel label;
};

std::vector<LabelTask> all_label_tasks() {
    std::vector<LabelTask> tasks;
    for (std::uint32_t p : kPrimes)
        for (int n = 1; n <= 5; ++n)
            for (const auto& label : classify(n, p, false))
                tasks.push_back({p, n, label});
    return tasks;
}

bool relation_suite(std::string& detail) {
    auto tasks = all_label_tasks();
    std::vector<std::string> failures(tasks.size());
    std::atomic<long> modules{0};
    parallel_for(worker_count(), static_cast<int>(tasks.size()), [&](int i) {
        const auto& task = tasks[i];
        auto cls = enumerate_class(label_weight(task.label, task.p));
        for (const auto& member : cls.members) {
            SuperModule d = build_D(member);
            Report rep = verify_module(d);
            ++modules;
            if (!rep.all_pass()) {
                failures[i] =
                    "weight " + member.str() + " p=" + std::to_string(task.p);
                return;
            }
        }
    });
    for (const auto& f : failures)
        if (!f.empty()) {
            detail = f;
            return false;
        }
    detail = std::to_string(modules.load()) + " modules checked";
    return true;
}

bool dimension_and_type(std::string& detail) {
    auto tasks = all_label_tasks();
    std::vector<std::string> failures(tasks.size());
    parallel_for(worker_count(), static_cast<int>(tasks.size()), [&](int i) {
        const auto& task = tasks[i];
        const ClassLabel& label = task.label;
        std::uint32_t p = task.p;
        WeightVector w = label_weight(label, p);
        SuperModule d = build_D(w);
        long f = label.star_u == 0
                     ? count_tableaux(label.diagram)
                     : count_p_standard(label.diagram, label.star_u,
                                        static_cast<int>(p) - 2 * label.star_u - 1);
        if (d.dim() != (1L << task.n) * f) {
            failures[i] = "dimension mismatch at " + label.str();
            return;
        }
        if (task.n <= 4) {
            EndoReport endo = end_dimension(d);
            bool ok = endo.total() == (1 << label.g0);
            if (label.g0 == 0) ok = ok && endo.even_dim == 1 && endo.odd_dim == 0;
            if (label.g0 == 1) ok = ok && endo.even_dim == 1 && endo.odd_dim == 1;
            if (!ok)
                failures[i] = "commutant mismatch at " + label.str() + ": (" +
                              std::to_string(endo.even_dim) + "," +
                              std::to_string(endo.odd_dim) + ")";
        }
    });
    for (const auto& f : failures)
        if (!f.empty()) {
            detail = f;
            return false;
        }
    return true;
}

bool bijection_round_trips(std::string& detail) {
    long vectors = 0, pairs = 0, strip = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const auto& w : enumerate_weights(n, 0, 6)) {
            if (!splittable(w)) continue;
            ++vectors;
            if (!(map_F(map_G(w), 0) == w)) {
                detail = "grow-then-read failed at " + w.str();
                return false;
            }
        }
        for (const auto& d : enumerate_placed_diagrams(n, 6)) {
            for (const auto& t : enumerate_tableaux(d)) {
                ++pairs;
                PlacedTableau pt{d, t};
                if (!(map_G(map_F(pt, 0)) == pt)) {
                    detail = "read-then-grow failed at " + pt.str();
                    return false;
                }
            }
        }
    }
    for (std::uint32_t p : {5u, 7u}) {
        for (int n = 2; n <= 8; ++n) {
            for (const auto& w : enumerate_weights(n, p, index_set_max(p))) {
                if (!in_affine_weight_set(w) || !in_w2(w)) continue;
                ++strip;
                if (!(map_F2(map_G2(w), p) == w)) {
                    detail = "strip round trip failed at " + w.str();
                    return false;
                }
            }
            for (int u = 1; u <= (static_cast<int>(p) - 3) / 2; ++u) {
                int m = n - static_cast<int>(p) + 2 * u + 1;
                if (m < 1) continue;
                int ext = static_cast<int>(p) - 2 * u - 1;
                for (const auto& d : enumerate_star_diagrams(m, u))
                    for (const auto& t : enumerate_p_standard(d, u, ext)) {
                        ++strip;
                        WeightVector w = map_F2(t, p);
                        if (!in_w2(w) || !(map_G2(w) == t)) {
                            detail = "strip inverse failed at " + w.str();
                            return false;
                        }
                    }
            }
        }
    }
    detail = std::to_string(vectors) + " vectors, " + std::to_string(pairs) +
             " tableau pairs, " + std::to_string(strip) + " strip cases";
    return true;
}

bool class_sizes(std::string& detail) {
    long checked = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : enumerate_weights(n, 0, 6)) {
            if (!in_affine_weight_set(w)) continue;
            ++checked;
            long f = count_tableaux(map_G(w).diagram);
            long cls = enumerate_class(w).size();
            if (f != cls) {
                detail = "class size " + std::to_string(cls) + " vs tableau count " +
                         std::to_string(f) + " at " + w.str();
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " weights checked";
    return true;
}

bool emptiness(std::string& detail) {
    auto check = [&](std::uint32_t p, int lo, int hi) {
        for (int n = lo; n <= hi; ++n) {
            auto labels = classify(n, p, false);
            if (!labels.empty()) {
                detail = std::to_string(labels.size()) + " labels at n=" +
                         std::to_string(n) + " p=" + std::to_string(p);
                return false;
            }
        }
        return true;
    };
    return check(3, 4, 6) && check(5, 7, 9) && check(7, 11, 13);
}

bool finite_quotient(std::string& detail) {
    for (std::uint32_t p : {0u, 5u, 7u}) {
        for (int n = 1; n <= 5; ++n) {
            Report rep = verify_finite(n, p);
            if (!rep.all_pass()) {
                for (const auto& c : rep.checks)
                    if (!c.pass) detail = c.name;
                detail += " (n=" + std::to_string(n) + " p=" + std::to_string(p) + ")";
                return false;
            }
            if (p == 0) {
                auto labels = classify(n, p, true);
                if (labels.size() != strict_partitions(n).size()) {
                    detail = "label count differs from strict partition count";
                    return false;
                }
            }
        }
    }
    return true;
}

bool intertwiner_identities(std::string& detail) {
    for (std::uint32_t p : kPrimes) {
        for (int n = 2; n <= 4; ++n) {
            Report rep = verify_intertwiners(n, p);
            if (!rep.all_pass()) {
                for (const auto& c : rep.checks)
                    if (!c.pass) detail = c.name;
                return false;
            }
        }
    }
    return true;
}

bool degenerate_suite(std::string& detail) {
    for (std::uint32_t p : {0u, 5u}) {
        Report rep = verify_larger(p);
        if (!rep.all_pass()) {
            for (const auto& c : rep.checks)
                if (!c.pass) detail = c.name + " (p=" + std::to_string(p) + ")";
            return false;
        }
    }
    return true;
}

bool negative_controls(std::string& detail) {
    if (in_affine_weight_set(wv({0, 0}))) {
        detail = "(0,0) accepted";
        return false;
    }
    if (is_x_semisimple(build_V2(1, 1, 0))) {
        detail = "V(1,1) reported semisimple";
        return false;
    }
    Report rep = verify_module(perturbed_copy(build_D(wv({0, 2}))));
    if (rep.all_pass()) {
        detail = "perturbed module passed";
        return false;
    }
    for (const auto& c : rep.checks)
        if (!c.pass && c.rule.rfind("relation:", 0) == 0) return true;
    detail = "failure did not name a relation";
    return false;
}

bool determinism(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "cli path not provided";
        return false;
    }
    std::string out1 = "acceptance_run1.json", out2 = "acceptance_run2.json";
    std::string base = "\"" + g_cli_path +
                       "\" verify classification --n 4 --p 0 --format json --out ";
    if (std::system((base + out1).c_str()) != 0 ||
        std::system((base + out2).c_str()) != 0) {
        detail = "cli invocation failed";
        return false;
    }
    auto slurp = [](const std::string& path) {
        std::ifstream is(path, std::ios::binary);
        std::stringstream ss;
        ss << is.rdbuf();
        return ss.str();
    };
    std::string a = slurp(out1), b = slurp(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    if (a.empty() || a != b) {
        detail = "outputs differ or are empty";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    criterion(1, "defining relations on every bounded affine weight module",
              relation_suite);
    criterion(2, "dimension formula and commutant split", dimension_and_type);
    criterion(3, "diagram/weight bijection round trips", bijection_round_trips);
    criterion(4, "class sizes equal tableau counts", class_sizes);
    criterion(5, "classification is empty beyond the rank bound", emptiness);
    criterion(6, "finite quotient: kernel, twisted sums, label counts",
              finite_quotient);
    criterion(7, "intertwiner identity families", intertwiner_identities);
    criterion(8, "x^2-semisimple rank-2/3 family", degenerate_suite);
    criterion(9, "negative controls", negative_controls);
    criterion(10, "byte-identical repeated verification", determinism);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
