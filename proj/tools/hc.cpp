// Command-line front end: enumerate combinatorial data, build modules,
// run verification campaigns, export JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hc/serialize.hpp"
#include "hc/supermodule.hpp"
#include "hc/tableaux.hpp"
#include "hc/verify.hpp"

namespace {

struct Options {
    int n = 3;
    std::uint32_t p = 0;
    bool finite = false;
    std::string weight;
    std::string shape;
    std::string inner;
    std::string out;
    std::string format = "text";
    int max_content = -1;
    int jobs = 1;
};

void write_output(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream os(opt.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + opt.out);
    os << payload;
}

void check_characteristic(std::uint32_t p) {
    if (p == 0) return;
    if (!hc::is_odd_prime(p))
        throw CLI::ValidationError("--p", "characteristic must be 0 or an odd prime");
}

hc::StrictPartition parse_partition(const std::string& csv) {
    hc::StrictPartition sp;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) sp.parts.push_back(std::stoi(tok));
    if (!sp.valid()) throw CLI::ValidationError("--shape", "not a strict partition");
    return sp;
}

int cap_of(const Options& opt) {
    return opt.max_content < 0 ? hc::default_max_content(opt.n) : opt.max_content;
}

int cmd_enumerate(const std::string& kind, const Options& opt) {
    std::ostringstream os;
    if (kind == "diagrams") {
        auto labels = hc::classify(opt.n, opt.p, false, opt.max_content);
        if (opt.p >= 3 && labels.empty()) {
            long bound = (static_cast<long>(opt.p) + 1) * (opt.p + 3) / 8;
            os << "no diagrams: rank " << opt.n << " exceeds the bound "
               << "(p+1)(p+3)/8 = " << bound << " for p = " << opt.p << "\n";
            write_output(opt, os.str());
            return 0;
        }
        if (opt.format == "json") {
            write_output(opt, hc::labels_to_json(labels, opt.n, opt.p, false));
            return 0;
        }
        for (const auto& l : labels) {
            os << l.str() << "\n" << l.diagram.box_layout();
        }
        os << labels.size() << " diagrams\n";
    } else if (kind == "weights") {
        int count = 0;
        for (const auto& w : hc::enumerate_weights(opt.n, opt.p, cap_of(opt)))
            if (hc::in_affine_weight_set(w) &&
                (!opt.finite || hc::in_finite_weight_set(w))) {
                os << w.str() << "\n";
                ++count;
            }
        os << count << " weights\n";
    } else if (kind == "classes") {
        std::set<std::vector<int>> seen;
        int count = 0;
        for (const auto& w : hc::enumerate_weights(opt.n, opt.p, cap_of(opt))) {
            if (!hc::in_affine_weight_set(w)) continue;
            auto cls = hc::enumerate_class(w);
            std::vector<int> key = cls.members[0].entries;
            for (const auto& mem : cls.members)
                key = std::min(key, mem.entries);
            if (!seen.insert(key).second) continue;
            ++count;
            os << "class of " << w.str() << " size " << cls.size() << ":";
            for (const auto& mem : cls.members) os << " " << mem.str();
            os << "\n";
        }
        os << count << " classes\n";
    } else if (kind == "tableaux") {
        auto outer = parse_partition(opt.shape);
        hc::StrictPartition in_part;
        if (!opt.inner.empty()) in_part = parse_partition(opt.inner);
        auto d = hc::PlacedDiagram::from_partitions(outer, in_part);
        auto tabs = hc::enumerate_tableaux(d);
        for (const auto& t : tabs) {
            if (opt.format == "json")
                os << hc::tableau_to_json(hc::PlacedTableau{d, t}) << "\n";
            else
                os << hc::PlacedTableau{d, t}.str() << "\n";
        }
        os << tabs.size() << " tableaux\n";
    } else {
        throw CLI::ValidationError("kind", "unknown enumeration kind " + kind);
    }
    write_output(opt, os.str());
    return 0;
}

int cmd_build(const Options& opt) {
    hc::WeightVector w = hc::parse_weight(opt.weight, opt.p);
    auto rejection = hc::affine_weight_rejection(w);
    if (rejection != hc::WeightRejection::None) {
        std::cerr << "weight rejected: " << hc::rejection_text(rejection) << "\n";
        return 2;
    }
    if (opt.finite && !hc::in_finite_weight_set(w)) {
        std::cerr << "weight rejected: not in the finite weight set "
                  << "(needs i_1 = 0 and each entry adjacent to an earlier one)\n";
        return 2;
    }
    hc::SuperModule d = hc::build_D(w);
    auto cls = hc::enumerate_class(w);
    int g0 = hc::gamma0(w);
    long simple = (1L << (w.size() - g0 / 2)) * cls.size();
    std::cout << "weight " << w.str() << "\n"
              << "class size " << cls.size() << "\n"
              << "thick dimension " << d.dim() << "\n"
              << "simple dimension " << simple << "\n"
              << "gamma0 " << g0 << " type " << (g0 % 2 ? 'Q' : 'M') << "\n";
    if (!opt.out.empty()) {
        std::ofstream os(opt.out, std::ios::binary);
        os << hc::module_to_json(d);
        std::cout << "module written to " << opt.out << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& scope, const Options& opt,
               const std::string& file) {
    hc::VerifyConfig cfg;
    cfg.max_content = opt.max_content;
    cfg.jobs = opt.jobs;
    hc::Report rep;
    if (scope == "classification") {
        rep = hc::verify_classification(opt.n, opt.p, cfg);
    } else if (scope == "finite") {
        rep = hc::verify_finite(opt.n, opt.p, cfg);
    } else if (scope == "larger") {
        rep = hc::verify_larger(opt.p, cfg);
    } else if (scope == "intertwiners") {
        rep = hc::verify_intertwiners(opt.n, opt.p);
    } else if (scope == "module-file") {
        std::ifstream is(file, std::ios::binary);
        if (!is) throw std::runtime_error("cannot open " + file);
        std::stringstream buf;
        buf << is.rdbuf();
        hc::SuperModule m = hc::module_from_json(buf.str());
        rep = hc::verify_module(m, file);
    } else {
        throw CLI::ValidationError("scope", "unknown verification scope " + scope);
    }
    write_output(opt, opt.format == "json" ? hc::report_to_json(rep) : rep.text());
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seminormal module construction and verification for affine "
                 "and finite Hecke-Clifford algebras"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("HC_JOBS")) opt.jobs = std::atoi(env);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", opt.n, "rank");
        cmd->add_option("--p", opt.p, "characteristic (0 or an odd prime)");
        cmd->add_option("--max-content", opt.max_content,
                        "content cap for characteristic-0 enumeration");
        cmd->add_option("--out", opt.out, "output file");
        cmd->add_option("--format", opt.format, "text|json");
        cmd->add_option("--jobs", opt.jobs, "worker threads");
        cmd->add_flag("--finite", opt.finite, "finite-quotient mode");
    };

    std::string kind, scope, file;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list combinatorial data");
    enumerate->add_option("kind", kind, "diagrams|weights|classes|tableaux")
        ->required();
    enumerate->add_option("--shape", opt.shape, "outer shape, comma separated");
    enumerate->add_option("--inner", opt.inner, "inner shape, comma separated");
    add_common(enumerate);

    CLI::App* build = app.add_subcommand("build", "build the module of a weight");
    build->add_option("--weight", opt.weight, "comma-separated entries")->required();
    add_common(build);

    CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("scope", scope,
                       "classification|finite|larger|intertwiners|module-file")
        ->required();
    verify->add_option("--file", file, "module JSON for module-file scope");
    add_common(verify);

    CLI::App* expo = app.add_subcommand("export", "write JSON artifacts");
    expo->add_option("kind", kind, "labels|module")->required();
    expo->add_option("--weight", opt.weight, "comma-separated entries");
    add_common(expo);

    CLI11_PARSE(app, argc, argv);

    try {
        check_characteristic(opt.p);
        if (enumerate->parsed()) return cmd_enumerate(kind, opt);
        if (build->parsed()) return cmd_build(opt);
        if (verify->parsed()) return cmd_verify(scope, opt, file);
        if (expo->parsed()) {
            if (kind == "labels") {
                auto labels = hc::classify(opt.n, opt.p, opt.finite, opt.max_content);
                write_output(opt, hc::labels_to_json(labels, opt.n, opt.p, opt.finite));
                return 0;
            }
            if (kind == "module") {
                hc::WeightVector w = hc::parse_weight(opt.weight, opt.p);
                write_output(opt, hc::module_to_json(hc::build_D(w)));
                return 0;
            }
            throw CLI::ValidationError("kind", "unknown export kind " + kind);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
