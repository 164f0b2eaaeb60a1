#include "hc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace hc {

void Report::add(const std::string& name, const std::string& rule, bool pass,
                 const std::string& witness) {
    checks.push_back({name, rule, pass, pass ? "" : witness});
}

void Report::merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
}

int Report::passed() const {
    int c = 0;
    for (const auto& r : checks) c += r.pass;
    return c;
}

int Report::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string Report::text() const {
    std::ostringstream os;
    os << "campaign " << campaign << " n=" << n << " p=" << p << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.pass && !c.witness.empty()) os << "  <- " << c.witness;
        os << "\n";
    }
    os << "summary: " << passed() << " passed, " << failed() << " failed\n";
    return os.str();
}

namespace {

struct Checker {
    Report& rep;
    std::string tag;
    int dim = 0;

    void eq(const std::string& name, const std::string& rule,
            const std::vector<MatTerm>& lhs, const std::vector<MatTerm>& rhs) {
        std::string witness;
        bool ok = terms_equal(lhs, rhs, dim, &witness);
        rep.add(tag + ": " + name, rule, ok, witness);
    }
    void that(const std::string& name, const std::string& rule, bool ok,
              const std::string& witness = "") {
        rep.add(tag + ": " + name, rule, ok, witness);
    }
};

long ipow2(int e) { return 1L << e; }

}  // namespace

void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int workers = std::min(jobs, count);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

Report verify_module(const SuperModule& m, const std::string& tag) {
    Report rep;
    rep.campaign = "module";
    rep.n = m.n;
    rep.p = m.p;
    Checker ck{rep, tag, m.dim()};
    using K = Generator::Kind;
    int n = m.n;
    Scalar pos = Scalar::one(m.p), neg = -Scalar::one(m.p);

    auto have = [&](K kind, int k) { return m.has_gen(kind, k); };
    auto one = [&](std::initializer_list<const SMat*> fs) {
        return std::vector<MatTerm>{{pos, fs}};
    };
    std::vector<MatTerm> identity{{pos, {}}};

    for (int k = 1; k < n; ++k) {
        if (!have(K::S, k)) continue;
        const SMat* s = &m.gen(K::S, k);
        ck.eq("s" + std::to_string(k) + " involution", "relation:involution",
              one({s, s}), identity);
        for (int j = k + 2; j < n; ++j)
            if (have(K::S, j))
                ck.eq("s" + std::to_string(k) + " s" + std::to_string(j) + " commute",
                      "relation:distant-transpositions",
                      one({s, &m.gen(K::S, j)}), one({&m.gen(K::S, j), s}));
        if (k + 1 < n && have(K::S, k + 1)) {
            const SMat* t = &m.gen(K::S, k + 1);
            ck.eq("s" + std::to_string(k) + " braid", "relation:braid",
                  one({s, t, s}), one({t, s, t}));
        }
        if (have(K::X, k) && have(K::X, k + 1) && have(K::C, k) && have(K::C, k + 1)) {
            ck.eq("s" + std::to_string(k) + " x" + std::to_string(k) +
                      " twisted commutation",
                  "relation:transposition-x", one({s, &m.gen(K::X, k)}),
                  {{pos, {&m.gen(K::X, k + 1), s}},
                   {neg, {}},
                   {neg, {&m.gen(K::C, k), &m.gen(K::C, k + 1)}}});
        }
        for (int j = 1; j <= n; ++j) {
            if (j == k || j == k + 1 || !have(K::X, j)) continue;
            ck.eq("s" + std::to_string(k) + " x" + std::to_string(j) + " commute",
                  "relation:transposition-x-distant", one({s, &m.gen(K::X, j)}),
                  one({&m.gen(K::X, j), s}));
        }
        if (have(K::C, k) && have(K::C, k + 1)) {
            ck.eq("s" + std::to_string(k) + " c" + std::to_string(k) + " exchange",
                  "relation:transposition-c", one({s, &m.gen(K::C, k)}),
                  one({&m.gen(K::C, k + 1), s}));
            ck.eq("s" + std::to_string(k) + " c" + std::to_string(k + 1) + " exchange",
                  "relation:transposition-c", one({s, &m.gen(K::C, k + 1)}),
                  one({&m.gen(K::C, k), s}));
        }
        for (int j = 1; j <= n; ++j) {
            if (j == k || j == k + 1 || !have(K::C, j)) continue;
            ck.eq("s" + std::to_string(k) + " c" + std::to_string(j) + " commute",
                  "relation:transposition-c-distant", one({s, &m.gen(K::C, j)}),
                  one({&m.gen(K::C, j), s}));
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (!have(K::X, i)) continue;
        for (int j = i + 1; j <= n; ++j)
            if (have(K::X, j))
                ck.eq("x" + std::to_string(i) + " x" + std::to_string(j) + " commute",
                      "relation:polynomial-commute",
                      one({&m.gen(K::X, i), &m.gen(K::X, j)}),
                      one({&m.gen(K::X, j), &m.gen(K::X, i)}));
    }
    for (int i = 1; i <= n; ++i) {
        if (!have(K::C, i)) continue;
        const SMat* c = &m.gen(K::C, i);
        ck.eq("c" + std::to_string(i) + " square", "relation:clifford-square",
              one({c, c}), identity);
        for (int j = i + 1; j <= n; ++j)
            if (have(K::C, j))
                ck.eq("c" + std::to_string(i) + " c" + std::to_string(j) +
                          " anticommute",
                      "relation:clifford-anticommute", one({c, &m.gen(K::C, j)}),
                      {{neg, {&m.gen(K::C, j), c}}});
    }
    for (int i = 1; i <= n; ++i) {
        if (!have(K::X, i)) continue;
        const SMat* x = &m.gen(K::X, i);
        for (int j = 1; j <= n; ++j) {
            if (!have(K::C, j)) continue;
            if (i == j)
                ck.eq("x" + std::to_string(i) + " c" + std::to_string(i) +
                          " anticommute",
                      "relation:x-c-anticommute", one({x, &m.gen(K::C, i)}),
                      {{neg, {&m.gen(K::C, i), x}}});
            else
                ck.eq("x" + std::to_string(i) + " c" + std::to_string(j) + " commute",
                      "relation:x-c-commute", one({x, &m.gen(K::C, j)}),
                      one({&m.gen(K::C, j), x}));
        }
    }
    for (const auto& [name, mat] : m.action) {
        bool odd = name[0] == 'c';
        bool ok = mat.parity_map(m.parity, 0, odd ? 1 : 0) &&
                  mat.parity_map(m.parity, 1, odd ? 0 : 1);
        ck.that(name + " parity discipline", "grading", ok);
    }
    return rep;
}

SuperModule perturbed_copy(const SuperModule& m) {
    SuperModule bad = m;
    auto it = bad.action.begin();
    SMat& mat = it->second;
    mat.set(0, 0, mat.get(0, 0) + Scalar::one(m.p));
    return bad;
}

namespace {

// Canonical class key: the lexicographically smallest member.
std::vector<int> class_key(const EquivalenceClass& cls) {
    std::vector<int> best = cls.members[0].entries;
    for (const auto& w : cls.members) best = std::min(best, w.entries);
    return best;
}

Report check_label_module(const ClassLabel& label, std::uint32_t p,
                          const VerifyConfig& cfg) {
    Report rep;
    Checker ck{rep, label.str()};
    WeightVector rep_w = label_weight(label, p);
    bool admissible = in_affine_weight_set(rep_w);
    ck.that("weight admissible", "weight-set", admissible, rep_w.str());
    if (!admissible) return rep;

    EquivalenceClass cls = enumerate_class(rep_w);
    ck.that("class size equals tableau count", "class-tableau-count",
            cls.size() == label.f,
            std::to_string(cls.size()) + " vs " + std::to_string(label.f));

    SuperModule d = build_D(rep_w);
    Report rels = verify_module(d, "relations");
    std::string witness;
    for (const auto& c : rels.checks)
        if (!c.pass) {
            witness = c.name;
            break;
        }
    ck.that("defining relations", "relation-suite", rels.all_pass(), witness);

    ck.that("x acts semisimply", "splittable", is_x_semisimple(d));

    auto wd = weight_decomposition(d);
    bool weights_ok = static_cast<int>(wd.size()) == cls.size();
    for (const auto& w : cls.members) {
        auto it = wd.find(w);
        weights_ok = weights_ok && it != wd.end() && it->second == ipow2(label.n);
    }
    ck.that("weight spaces are the class members", "weight-spaces", weights_ok);

    ck.that("thick dimension", "dimension-formula", d.dim() == label.dim_thick,
            std::to_string(d.dim()) + " vs " + std::to_string(label.dim_thick));

    if (label.n <= cfg.end_dim_max_n) {
        EndoReport endo = end_dimension(d);
        bool ok = endo.total() == ipow2(label.g0);
        if (label.g0 == 0) ok = ok && endo.even_dim == 1 && endo.odd_dim == 0;
        if (label.g0 == 1) ok = ok && endo.even_dim == 1 && endo.odd_dim == 1;
        ck.that("commutant dimension", "commutant",
                ok,
                "(" + std::to_string(endo.even_dim) + "," +
                    std::to_string(endo.odd_dim) + ") vs total " +
                    std::to_string(ipow2(label.g0)));
    }
    return rep;
}

}  // namespace

Report verify_classification(int n, std::uint32_t p, const VerifyConfig& cfg) {
    Report rep;
    rep.campaign = "classification";
    rep.n = n;
    rep.p = p;
    int cap = cfg.max_content < 0 ? default_max_content(n) : cfg.max_content;
    auto labels = classify(n, p, false, cap);

    if (p >= 3) {
        long bound = (static_cast<long>(p) + 1) * (p + 3) / 8;
        if (n > bound) {
            rep.add("no labels beyond rank (p+1)(p+3)/8 = " + std::to_string(bound),
                    "emptiness", labels.empty(),
                    std::to_string(labels.size()) + " labels");
            return rep;
        }
    }

    // Label count against an independent weight-side enumeration.
    {
        std::set<std::vector<int>> keys;
        for (const auto& w : enumerate_weights(n, p, cap))
            if (in_affine_weight_set(w)) keys.insert(class_key(enumerate_class(w)));
        rep.add("label count equals weight class count", "label-count",
                keys.size() == labels.size(),
                std::to_string(keys.size()) + " vs " + std::to_string(labels.size()));
    }

    std::vector<Report> subs(labels.size());
    parallel_for(cfg.jobs, static_cast<int>(labels.size()),
                 [&](int i) { subs[i] = check_label_module(labels[i], p, cfg); });
    for (const auto& s : subs) rep.merge(s);

    std::set<std::vector<int>> reps_seen;
    bool distinct = true;
    for (const auto& label : labels)
        distinct &= reps_seen.insert(class_key(enumerate_class(label_weight(label, p))))
                        .second;
    rep.add("labels give pairwise distinct weight classes", "pairwise-distinct",
            distinct);
    return rep;
}

Report verify_finite(int n, std::uint32_t p, const VerifyConfig& cfg) {
    Report rep;
    rep.campaign = "finite";
    rep.n = n;
    rep.p = p;
    auto labels = classify(n, p, true);

    {
        // Independent count: distinct classes met by the finite weight set.
        int cap = p == 0 ? n - 1 : index_set_max(p);
        std::set<std::vector<int>> keys;
        for (const auto& w : enumerate_weights(n, p, cap))
            if (in_finite_weight_set(w)) keys.insert(class_key(enumerate_class(w)));
        rep.add("label count equals finite weight class count", "label-count",
                keys.size() == labels.size(),
                std::to_string(keys.size()) + " vs " + std::to_string(labels.size()));
    }

    std::vector<Report> subs(labels.size());
    parallel_for(cfg.jobs, static_cast<int>(labels.size()), [&](int i) {
        const ClassLabel& label = labels[i];
        Report sub;
        Checker ck{sub, label.str()};
        WeightVector w = label_weight(label, p);
        ck.that("weight lies in the finite weight set", "finite-weight-set",
                in_finite_weight_set(w), w.str());
        ck.that("zero count matches the length", "gamma0",
                gamma0(w) == label.g0);
        SuperModule d = build_D(w);
        ck.that("thick dimension", "dimension-formula",
                d.dim() == label.dim_thick,
                std::to_string(d.dim()) + " vs " +
                    std::to_string(label.dim_thick));
        ck.that("x1 acts by zero", "x1-zero",
                d.gen(Generator::Kind::X, 1).is_zero());
        bool jm_ok = true;
        std::string jm_witness;
        for (int k = 2; k <= n && jm_ok; ++k) {
            SMat lk = element_matrix(d, jucys_murphy(k, n, p));
            if (lk != d.gen(Generator::Kind::X, k)) {
                jm_ok = false;
                jm_witness = "x" + std::to_string(k);
            }
        }
        ck.that("x matches the twisted transposition sums", "jucys-murphy", jm_ok,
                jm_witness);
        Report rels = verify_module(d, "relations");
        ck.that("defining relations", "relation-suite", rels.all_pass());
        subs[i] = sub;
    });
    for (const auto& s : subs) rep.merge(s);
    return rep;
}

Report verify_larger(std::uint32_t p, const VerifyConfig& cfg) {
    (void)cfg;
    Report rep;
    rep.campaign = "larger";
    rep.n = 3;
    rep.p = p;
    Checker ck{rep, "rank2"};
    int top = index_set_max(p);
    int grid = top < 0 ? 4 : top;

    std::vector<std::map<WeightVector, int>> seen_decompositions;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j) {
            SuperModule v = build_V2(i, j, p);
            bool expect = i != j || i == 0;
            bool got = is_x_squared_semisimple(v);
            ck.that("V(" + std::to_string(i) + "," + std::to_string(j) +
                        ") x^2 semisimple iff i != j or i = j = 0",
                    "rank2-dichotomy", got == expect);
            seen_decompositions.push_back(weight_decomposition(v));
        }

    {
        SuperModule v = build_V2(0, 0, p);
        using K = Generator::Kind;
        SMat id = SMat::identity(v.dim(), p);
        SMat cc = v.gen(K::C, 1) * v.gen(K::C, 2);
        SMat lhs = (id + cc) * v.gen(K::X, 1) + (id - cc) * v.gen(K::X, 2);
        ck.that("V(0,0): (1+c1c2)x1 + (1-c1c2)x2 = 0", "rank2-degenerate-identity",
                lhs.is_zero());
        ck.that("V(0,0): x1 x2 = 0", "rank2-degenerate-identity",
                (v.gen(K::X, 1) * v.gen(K::X, 2)).is_zero());
    }

    {
        SuperModule m = build_V001(p);
        Report rels = verify_module(m, "V(0,0,1) relations");
        ck.that("V(0,0,1) satisfies all relations including braid",
                "rank3-extension", rels.all_pass());
        SMat x3 = m.gen(Generator::Kind::X, 3);
        ck.that("V(0,0,1): x3^2 = 2", "rank3-extension",
                x3 * x3 ==
                    SMat::identity(m.dim(), p).scale(Scalar::from_int(p, 2)));
        ck.that("V(0,0,1): x^2 semisimple", "rank3-extension",
                is_x_squared_semisimple(m));
        seen_decompositions.push_back(weight_decomposition(m));

        SuperModule m2 = build_V100(p);
        Report rels2 = verify_module(m2, "V(1,0,0) relations");
        ck.that("V(1,0,0) satisfies all relations including braid",
                "rank3-extension", rels2.all_pass());
        ck.that("V(1,0,0): x^2 semisimple", "rank3-extension",
                is_x_squared_semisimple(m2));
        seen_decompositions.push_back(weight_decomposition(m2));
    }

    for (int j = 2; j <= 3; ++j) {
        if (top >= 0 && j > top) continue;
        SuperModule base = tensor(build_V2(0, 0, p), build_L(j, p));
        SuperModule m = build_induced(base, {2, 1});
        std::string name = "ind V(0,0)*L(" + std::to_string(j) + ")";
        Report rels = verify_module(m, name);
        ck.that(name + " satisfies all relations", "rank3-induced",
                rels.all_pass());
        bool annihilated = true;
        Scalar qj = q_of(j, p);
        for (int k = 1; k <= 3; ++k) {
            SMat xk = m.gen(Generator::Kind::X, k);
            SMat sq = xk * xk;
            annihilated = annihilated &&
                          (sq * (sq - SMat::identity(m.dim(), p).scale(qj))).is_zero();
        }
        ck.that(name + ": x_k^2 (x_k^2 - q(j)) = 0", "rank3-induced", annihilated);
        ck.that(name + ": x^2 semisimple", "rank3-induced",
                is_x_squared_semisimple(m));
        seen_decompositions.push_back(weight_decomposition(m));
    }

    {
        SuperModule kato = build_kato(3, p);
        SMat x1 = kato.gen(Generator::Kind::X, 1);
        SMat sq = x1 * x1;
        ck.that("triple-degenerate module: minimal polynomial of x1 is t^3",
                "kato-nilpotency", (sq * x1).is_zero() && !sq.is_zero());
        ck.that("triple-degenerate module: x^2 not semisimple", "kato-nilpotency",
                !is_x_squared_semisimple(kato));
    }

    {
        bool pattern_ok = true;
        std::string witness;
        for (const auto& wd : seen_decompositions)
            for (const auto& [w, dim] : wd)
                for (int k = 0; k + 2 < w.size(); ++k) {
                    if (w.entries[k] != w.entries[k + 2]) continue;
                    int u = w.entries[k], v = w.entries[k + 1];
                    bool ok = p == 0
                                  ? u == 0
                                  : (u == 0 || (u == (static_cast<int>(p) - 3) / 2 &&
                                                v == (static_cast<int>(p) - 1) / 2));
                    if (!ok) {
                        pattern_ok = false;
                        witness = w.str();
                    }
                }
        ck.that("repeated-at-distance-2 weight patterns", "weight-pattern",
                pattern_ok, witness);
    }
    return rep;
}

Report verify_intertwiners(int n, std::uint32_t p) {
    Report rep;
    rep.campaign = "intertwiners";
    rep.n = n;
    rep.p = p;
    for (const auto& c : check_intertwiner_identities(n, p))
        rep.add(c.name, "intertwiner", c.pass);
    return rep;
}

}  // namespace hc
