#include "hc/supermodule.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hc {

namespace {

int popcount_below(unsigned bits, int a) {
    unsigned mask = (1u << a) - 1;
    return __builtin_popcount(bits & mask);
}

std::string bits_label(unsigned b, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (b >> i & 1) ? '1' : '0';
    return s;
}

}  // namespace

std::string SuperModule::gen_name(Generator::Kind kind, int k) {
    const char* prefix = kind == Generator::Kind::S   ? "s"
                         : kind == Generator::Kind::X ? "x"
                                                      : "c";
    return prefix + std::to_string(k);
}

bool SuperModule::has_gen(Generator::Kind kind, int k) const {
    return action.count(gen_name(kind, k)) > 0;
}

const SMat& SuperModule::gen(Generator::Kind kind, int k) const {
    auto it = action.find(gen_name(kind, k));
    if (it == action.end())
        throw ScalarError("module carries no action of " + gen_name(kind, k));
    return it->second;
}

void SuperModule::set_gen(Generator::Kind kind, int k, SMat m) {
    action[gen_name(kind, k)] = std::move(m);
}

// ---------------------------------------------------------------------------
// Elementary builders

SuperModule build_L(int i, std::uint32_t p) {
    SuperModule m;
    m.n = 1;
    m.p = p;
    m.basis = {"v0", "v1"};
    m.parity = {0, 1};
    Scalar root = scalar_sqrt(q_of(i, p));
    SMat x(2, 2, p);
    x.set(0, 0, root);
    x.set(1, 1, -root);
    SMat c(2, 2, p);
    c.set(1, 0, Scalar::one(p));
    c.set(0, 1, Scalar::one(p));
    m.set_gen(Generator::Kind::X, 1, std::move(x));
    m.set_gen(Generator::Kind::C, 1, std::move(c));
    WeightVector w;
    w.p = p;
    w.entries = {i};
    m.weights = {w, w};
    return m;
}

SuperModule tensor(const SuperModule& a, const SuperModule& b) {
    if (a.p != b.p) throw ScalarError("characteristic mismatch in tensor");
    SuperModule m;
    m.n = a.n + b.n;
    m.p = a.p;
    int da = a.dim();
    // First factor runs fastest, matching the bit order of the tensor model.
    for (int j = 0; j < b.dim(); ++j)
        for (int i = 0; i < da; ++i) {
            m.basis.push_back(a.basis[i] + "*" + b.basis[j]);
            m.parity.push_back((a.parity[i] + b.parity[j]) % 2);
        }
    if (!a.weights.empty() && !b.weights.empty()) {
        for (int j = 0; j < b.dim(); ++j)
            for (int i = 0; i < da; ++i) {
                WeightVector w;
                w.p = a.p;
                w.entries = a.weights[i].entries;
                w.entries.insert(w.entries.end(), b.weights[j].entries.begin(),
                                 b.weights[j].entries.end());
                m.weights.push_back(std::move(w));
            }
    }

    for (const auto& [name, mat] : a.action) {
        SMat big(m.dim(), m.dim(), m.p);
        for (int r = 0; r < da; ++r)
            for (const auto& [c, v] : mat.row(r))
                for (int j = 0; j < b.dim(); ++j)
                    big.set(j * da + r, j * da + c, v);
        m.action[name] = std::move(big);
    }
    for (const auto& [name, mat] : b.action) {
        bool odd = name[0] == 'c';
        int index = std::stoi(name.substr(1)) + a.n;
        std::string shifted = name.substr(0, 1) + std::to_string(index);
        SMat big(m.dim(), m.dim(), m.p);
        for (int i = 0; i < da; ++i) {
            bool neg = odd && a.parity[i] == 1;
            for (int r = 0; r < b.dim(); ++r)
                for (const auto& [c, v] : mat.row(r))
                    big.set(r * da + i, c * da + i, neg ? -v : v);
        }
        m.action[shifted] = std::move(big);
    }
    return m;
}

SuperModule build_weight_module(const WeightVector& w) {
    if (!weight_in_range(w)) throw ScalarError("weight out of range: " + w.str());
    int n = w.size();
    if (n > 20) throw ScalarError("rank too large for the tensor model");
    SuperModule m;
    m.n = n;
    m.p = w.p;
    unsigned N = 1u << n;
    std::vector<Scalar> roots;
    for (int k = 0; k < n; ++k) roots.push_back(scalar_sqrt(q_of(w.entries[k], w.p)));
    for (unsigned b = 0; b < N; ++b) {
        m.basis.push_back(bits_label(b, n));
        m.parity.push_back(__builtin_popcount(b) % 2);
        m.weights.push_back(w);
    }
    for (int k = 1; k <= n; ++k) {
        SMat x(N, N, w.p);
        SMat c(N, N, w.p);
        for (unsigned b = 0; b < N; ++b) {
            Scalar e = (b >> (k - 1) & 1) ? -roots[k - 1] : roots[k - 1];
            x.set(b, b, e);
            Scalar sign = popcount_below(b, k - 1) % 2 ? -Scalar::one(w.p)
                                                       : Scalar::one(w.p);
            c.set(b ^ (1u << (k - 1)), b, sign);
        }
        m.set_gen(Generator::Kind::X, k, std::move(x));
        m.set_gen(Generator::Kind::C, k, std::move(c));
    }
    return m;
}

SMat xi_matrix(const SMat& xk, const SMat& xk1, const SMat& ck, const SMat& ck1,
               const Scalar& denom) {
    Scalar dinv = denom.inverse();
    SMat sum = (xk + xk1) + ck * ck1 * (xk - xk1);
    return sum.scale(-dinv);
}

Scalar omega_scalar(int a, int b, std::uint32_t p) {
    Scalar qa = q_of(a, p), qb = q_of(b, p);
    Scalar diff = qa - qb;
    if (diff.is_zero()) throw ScalarError("coupling undefined for equal eigenvalues");
    Scalar inner = Scalar::one(p) -
                   Scalar::from_int(p, 2) * (qa + qb) * (diff * diff).inverse();
    return scalar_sqrt(inner);
}

// ---------------------------------------------------------------------------
// Seminormal module of an affine weight

SuperModule build_D(const WeightVector& w) {
    WeightRejection rej = affine_weight_rejection(w);
    if (rej != WeightRejection::None)
        throw ScalarError("not an affine weight (" + rejection_text(rej) +
                          "): " + w.str());
    EquivalenceClass cls = enumerate_class(w);
    int n = w.size();
    unsigned N = 1u << n;
    std::uint32_t p = w.p;
    SuperModule m;
    m.n = n;
    m.p = p;

    std::vector<Scalar> roots;
    for (int k = 0; k < n; ++k) roots.push_back(scalar_sqrt(q_of(w.entries[k], p)));

    for (int ci = 0; ci < cls.size(); ++ci)
        for (unsigned b = 0; b < N; ++b) {
            m.basis.push_back("t" + std::to_string(ci) + ":" + bits_label(b, n));
            m.parity.push_back(__builtin_popcount(b) % 2);
            m.weights.push_back(cls.members[ci]);
        }

    auto idx = [&](int ci, unsigned b) { return ci * static_cast<int>(N) + b; };
    std::vector<Perm> inv_taus;
    for (const auto& tau : cls.taus) inv_taus.push_back(tau.inverse());

    // x_k and c_k act on the component of tau through the twisted base slot
    // tau^{-1}(k).
    for (int k = 1; k <= n; ++k) {
        SMat x(m.dim(), m.dim(), p);
        SMat c(m.dim(), m.dim(), p);
        for (int ci = 0; ci < cls.size(); ++ci) {
            int a = inv_taus[ci](k - 1);
            for (unsigned b = 0; b < N; ++b) {
                Scalar e = (b >> a & 1) ? -roots[a] : roots[a];
                x.set(idx(ci, b), idx(ci, b), e);
                Scalar sign = popcount_below(b, a) % 2 ? -Scalar::one(p)
                                                       : Scalar::one(p);
                c.set(idx(ci, b ^ (1u << a)), idx(ci, b), sign);
            }
        }
        m.set_gen(Generator::Kind::X, k, std::move(x));
        m.set_gen(Generator::Kind::C, k, std::move(c));
    }

    for (int k = 1; k < n; ++k) {
        SMat s(m.dim(), m.dim(), p);
        for (int ci = 0; ci < cls.size(); ++ci) {
            const WeightVector& j = cls.members[ci];
            int a = inv_taus[ci](k - 1);   // base slot acting as x_k
            int a2 = inv_taus[ci](k);      // base slot acting as x_{k+1}
            Scalar denom = q_of(j.entries[k - 1], p) - q_of(j.entries[k], p);
            Scalar dinv = denom.inverse();
            unsigned mask = (1u << a) | (1u << a2);
            for (unsigned b = 0; b < N; ++b) {
                Scalar ea = (b >> a & 1) ? -roots[a] : roots[a];
                Scalar ea2 = (b >> a2 & 1) ? -roots[a2] : roots[a2];
                // diagonal piece of Xi
                s.add_at(idx(ci, b), idx(ci, b), -(ea + ea2) * dinv);
                // Clifford piece of Xi: apply c_{k+1} then c_k on the twisted
                // slots, then the (x_k - x_{k+1}) eigenvalue.
                unsigned b1 = b ^ (1u << a2);
                int sgn = popcount_below(b, a2) + popcount_below(b1, a);
                Scalar coeff = (ea - ea2) * dinv;
                if (sgn % 2 == 0) coeff = -coeff;  // overall minus from Xi
                s.add_at(idx(ci, b ^ mask), idx(ci, b), coeff);
            }
            if (is_admissible(j, k)) {
                Scalar om = omega_scalar(j.entries[k - 1], j.entries[k], p);
                WeightVector jk = apply_transposition(j, k);
                int cj = cls.index_of(jk);
                if (cj < 0) throw ScalarError("class member missing: " + jk.str());
                for (unsigned b = 0; b < N; ++b)
                    s.add_at(idx(cj, b), idx(ci, b), om);
            }
        }
        m.set_gen(Generator::Kind::S, k, std::move(s));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Induction

namespace {

std::vector<int> block_of_position(const std::vector<int>& mu) {
    std::vector<int> block;
    for (size_t b = 0; b < mu.size(); ++b)
        for (int i = 0; i < mu[b]; ++i) block.push_back(static_cast<int>(b));
    return block;
}

// Minimal-length representative of v S_mu: sort the values over each block of
// positions.
Perm coset_rep(const Perm& v, const std::vector<int>& block) {
    std::vector<int> img = v.one_line();
    size_t i = 0;
    while (i < img.size()) {
        size_t j = i;
        while (j < img.size() && block[j] == block[i]) ++j;
        std::sort(img.begin() + i, img.begin() + j);
        i = j;
    }
    return Perm(img);
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Matrix of a block-preserving permutation through the base's internal
// transposition actions.
SMat internal_perm_matrix(const SuperModule& base, const Perm& u) {
    SMat acc = SMat::identity(base.dim(), base.p);
    for (int j : u.reduced_word()) acc = acc * base.gen(Generator::Kind::S, j + 1);
    return acc;
}

}  // namespace

SuperModule build_induced(const SuperModule& base, const std::vector<int>& mu) {
    int n = 0;
    for (int part : mu) n += part;
    if (n != base.n) throw ScalarError("composition size mismatch");
    std::uint32_t p = base.p;
    std::vector<int> block = block_of_position(mu);
    for (int j = 1; j < n; ++j)
        if (block[j - 1] == block[j] && !base.has_gen(Generator::Kind::S, j))
            throw ScalarError("base misses an internal transposition action");

    std::vector<Perm> reps;
    for (const auto& v : all_perms(n))
        if (coset_rep(v, block) == v) reps.push_back(v);
    std::map<std::vector<int>, int> rep_index;
    for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i].one_line()] = i;

    int db = base.dim();
    SuperModule m;
    m.n = n;
    m.p = p;
    for (const auto& rep : reps)
        for (int v = 0; v < db; ++v) {
            std::ostringstream os;
            os << "w";
            for (int i = 0; i < n; ++i) os << rep(i) + 1;
            os << ":" << base.basis[v];
            m.basis.push_back(os.str());
            m.parity.push_back(base.parity[v]);
        }
    auto idx = [&](int r, int v) { return r * db + v; };
    auto place_block = [&](SMat& mat, int rto, int rfrom, const SMat& op,
                           const Scalar& coeff) {
        for (int r = 0; r < db; ++r)
            for (const auto& [c, val] : op.row(r))
                mat.add_at(idx(rto, r), idx(rfrom, c), val * coeff);
    };

    // c_k (w (x) m) = w (x) c_{w^{-1}(k)} m
    for (int k = 1; k <= n; ++k) {
        SMat c(m.dim(), m.dim(), p);
        for (size_t r = 0; r < reps.size(); ++r) {
            int a = reps[r].inverse()(k - 1);
            place_block(c, r, r, base.gen(Generator::Kind::C, a + 1), Scalar::one(p));
        }
        m.set_gen(Generator::Kind::C, k, std::move(c));
    }

    // s_k (w (x) m): factor s_k w = w' u with u inside the composition.
    for (int k = 1; k < n; ++k) {
        SMat s(m.dim(), m.dim(), p);
        for (size_t r = 0; r < reps.size(); ++r) {
            Perm v = reps[r].swap_values(k - 1);
            Perm wprime = coset_rep(v, block);
            Perm u = wprime.inverse() * v;
            int rto = rep_index.at(wprime.one_line());
            place_block(s, rto, r, internal_perm_matrix(base, u), Scalar::one(p));
        }
        m.set_gen(Generator::Kind::S, k, std::move(s));
    }

    // x_k (w (x) m) = w (x) x_{w^{-1}(k)} m plus Clifford corrections from
    // pushing x through a reduced word of w.
    for (int k = 1; k <= n; ++k) {
        SMat x(m.dim(), m.dim(), p);
        for (size_t r = 0; r < reps.size(); ++r) {
            const Perm& w = reps[r];
            std::vector<int> word = w.reduced_word();
            int len = static_cast<int>(word.size());
            // prefix[t] = s_{word[0]} o ... o s_{word[t-1]}
            std::vector<Perm> prefix(len + 1, Perm(n)), suffix(len + 1, Perm(n));
            for (int t = 0; t < len; ++t)
                prefix[t + 1] =
                    prefix[t] * Perm::transposition(n, word[t], word[t] + 1);
            for (int t = len - 1; t >= 0; --t)
                suffix[t] =
                    Perm::transposition(n, word[t], word[t] + 1) * suffix[t + 1];

            int cur = k - 1;
            for (int t = 0; t < len; ++t) {
                int i = word[t];
                int delta = 0;
                if (cur == i + 1) {
                    delta = 1;  // x_{i+1} s_i = s_i x_i + (1 + c_i c_{i+1})
                    cur = i;
                } else if (cur == i) {
                    delta = -1;  // x_i s_i = s_i x_{i+1} - (1 - c_i c_{i+1})
                    cur = i + 1;
                } else {
                    continue;
                }
                Perm vt = prefix[t] * suffix[t + 1];
                Perm wprime = coset_rep(vt, block);
                Perm u = wprime.inverse() * vt;
                int rto = rep_index.at(wprime.one_line());
                SMat umat = internal_perm_matrix(base, u);
                Scalar dscal = Scalar::from_int(p, delta);
                place_block(x, rto, r, umat, dscal);
                // delta * c_i c_{i+1} moved through the suffix: indices
                // relabel, a swap costs a sign.
                const Perm suf_inv = suffix[t + 1].inverse();
                int a = suf_inv(i), b = suf_inv(i + 1);
                int sgn = 1;
                if (a > b) {
                    std::swap(a, b);
                    sgn = -1;
                }
                SMat cc = base.gen(Generator::Kind::C, a + 1) *
                          base.gen(Generator::Kind::C, b + 1);
                place_block(x, rto, r, umat * cc, Scalar::from_int(p, sgn));
            }
            place_block(x, r, r, base.gen(Generator::Kind::X, cur + 1),
                        Scalar::one(p));
        }
        m.set_gen(Generator::Kind::X, k, std::move(x));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Small named modules

SuperModule build_V2(int i, int j, std::uint32_t p) {
    WeightVector w;
    w.p = p;
    w.entries = {i, j};
    if (i == j + 1 || i == j - 1) {
        SuperModule m = build_weight_module(w);
        Scalar denom = q_of(i, p) - q_of(j, p);
        m.set_gen(Generator::Kind::S, 1,
                  xi_matrix(m.gen(Generator::Kind::X, 1), m.gen(Generator::Kind::X, 2),
                            m.gen(Generator::Kind::C, 1), m.gen(Generator::Kind::C, 2),
                            denom));
        return m;
    }
    SuperModule m = build_induced(build_weight_module(w), {1, 1});
    return m;
}

SuperModule build_V001(std::uint32_t p) {
    SuperModule v00 = build_V2(0, 0, p);
    SuperModule m = tensor(v00, build_L(1, p));
    Scalar denom = q_of(0, p) - q_of(1, p);  // x_2^2 - x_3^2 acts as -2
    m.set_gen(Generator::Kind::S, 2,
              xi_matrix(m.gen(Generator::Kind::X, 2), m.gen(Generator::Kind::X, 3),
                        m.gen(Generator::Kind::C, 2), m.gen(Generator::Kind::C, 3),
                        denom));
    return m;
}

SuperModule build_V100(std::uint32_t p) {
    SuperModule v00 = build_V2(0, 0, p);
    SuperModule m = tensor(build_L(1, p), v00);
    Scalar denom = q_of(1, p) - q_of(0, p);  // x_1^2 - x_2^2 acts as 2
    m.set_gen(Generator::Kind::S, 1,
              xi_matrix(m.gen(Generator::Kind::X, 1), m.gen(Generator::Kind::X, 2),
                        m.gen(Generator::Kind::C, 1), m.gen(Generator::Kind::C, 2),
                        denom));
    return m;
}

SuperModule build_kato(int n, std::uint32_t p) {
    WeightVector w;
    w.p = p;
    w.entries.assign(n, 0);
    return build_induced(build_weight_module(w), std::vector<int>(n, 1));
}

SuperModule build_basic_spin(int n, std::uint32_t p) {
    SuperModule m;
    m.n = n;
    m.p = p;
    unsigned N = 1u << n;
    for (unsigned b = 0; b < N; ++b) {
        m.basis.push_back("c" + bits_label(b, n));
        m.parity.push_back(__builtin_popcount(b) % 2);
    }
    for (int k = 1; k <= n; ++k) {
        SMat c(N, N, p);
        for (unsigned b = 0; b < N; ++b) {
            Scalar sign = popcount_below(b, k - 1) % 2 ? -Scalar::one(p)
                                                       : Scalar::one(p);
            c.set(b ^ (1u << (k - 1)), b, sign);
        }
        m.set_gen(Generator::Kind::C, k, std::move(c));
    }
    for (int k = 1; k < n; ++k) {
        SMat s(N, N, p);
        for (unsigned b = 0; b < N; ++b) {
            unsigned bk = b >> (k - 1) & 1, bk1 = b >> k & 1;
            unsigned target = (b & ~(3u << (k - 1))) | (bk << k) | (bk1 << (k - 1));
            Scalar sign = (bk & bk1) ? -Scalar::one(p) : Scalar::one(p);
            s.set(target, b, sign);
        }
        m.set_gen(Generator::Kind::S, k, std::move(s));
    }
    return m;
}

SuperModule parity_shift(const SuperModule& m) {
    SuperModule out = m;
    for (auto& par : out.parity) par ^= 1;
    for (auto& [name, mat] : out.action)
        if (name[0] == 'c') mat = mat.scale(-Scalar::one(m.p));
    return out;
}

// ---------------------------------------------------------------------------
// Analysis

SMat element_matrix(const SuperModule& m, const PBWElement& e) {
    SMat out(m.dim(), m.dim(), m.p);
    for (const auto& [mono, coeff] : e.terms()) {
        SMat acc = SMat::identity(m.dim(), m.p);
        for (size_t i = 0; i < mono.alpha.size(); ++i)
            for (int t = 0; t < mono.alpha[i]; ++t)
                acc = acc * m.gen(Generator::Kind::X, static_cast<int>(i) + 1);
        for (size_t i = 0; i < mono.beta.size(); ++i)
            if (mono.beta[i])
                acc = acc * m.gen(Generator::Kind::C, static_cast<int>(i) + 1);
        for (int j : mono.w.reduced_word())
            acc = acc * m.gen(Generator::Kind::S, j + 1);
        out = out + acc.scale(coeff);
    }
    return out;
}

namespace {

int label_of_eigenvalue(const Scalar& qval, std::uint32_t p, int limit) {
    for (int i = 0; i <= limit; ++i)
        if (q_of(i, p) == qval) return i;
    throw ScalarError("eigenvalue is not q(i) for a label in range");
}

}  // namespace

std::map<WeightVector, int> weight_decomposition(const SuperModule& m,
                                                 const std::vector<int>& candidates) {
    int n = m.n;
    std::uint32_t p = m.p;
    for (int k = 1; k <= n; ++k)
        if (!m.has_gen(Generator::Kind::X, k))
            throw ScalarError("weight decomposition needs all x-actions");

    bool diagonal = true;
    for (int k = 1; k <= n && diagonal; ++k)
        diagonal = m.gen(Generator::Kind::X, k).is_diagonal();

    std::map<WeightVector, int> out;
    if (diagonal) {
        int limit = index_set_max(p);
        if (limit < 0) {
            limit = 8;
            for (const auto& w : m.weights)
                for (int v : w.entries) limit = std::max(limit, v);
        }
        for (int v = 0; v < m.dim(); ++v) {
            WeightVector w;
            w.p = p;
            for (int k = 1; k <= n; ++k) {
                Scalar e = m.gen(Generator::Kind::X, k).get(v, v);
                w.entries.push_back(label_of_eigenvalue(e * e, p, limit));
            }
            ++out[w];
        }
        return out;
    }

    std::vector<int> labels = candidates;
    if (labels.empty()) {
        int limit = index_set_max(p);
        if (limit < 0) {
            limit = 8;
            for (const auto& w : m.weights)
                for (int v : w.entries) limit = std::max(limit, v);
        }
        for (int i = 0; i <= limit; ++i) labels.push_back(i);
    }

    // Stable powers of x_k^2 - q(i) once per (k, label).
    std::vector<std::vector<SMat>> stab(n);
    for (int k = 0; k < n; ++k) {
        const SMat& xk = m.gen(Generator::Kind::X, k + 1);
        SMat sq = xk * xk;
        for (int lab : labels) {
            SMat shifted = sq - SMat::identity(m.dim(), p).scale(q_of(lab, p));
            stab[k].push_back(stable_power(shifted));
        }
    }

    int total = 0;
    std::vector<SMat> chosen;
    WeightVector w;
    w.p = p;
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            int d = joint_kernel_dim(chosen);
            if (d > 0) out[w] = d;
            total += d;
            return;
        }
        for (size_t li = 0; li < labels.size(); ++li) {
            chosen.push_back(stab[k][li]);
            w.entries.push_back(labels[li]);
            // Prune: the joint kernel so far must be nonzero.
            if (joint_kernel_dim(chosen) > 0) rec(k + 1);
            chosen.pop_back();
            w.entries.pop_back();
        }
    };
    rec(0);
    if (total != m.dim())
        throw ScalarError("weight decomposition incomplete; widen the label range");
    return out;
}

bool is_x_squared_semisimple(const SuperModule& m) {
    auto wd = weight_decomposition(m);
    for (int k = 1; k <= m.n; ++k) {
        std::vector<Scalar> qs;
        for (const auto& [w, d] : wd) {
            Scalar q = q_of(w.entries[k - 1], m.p);
            if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
        }
        const SMat& xk = m.gen(Generator::Kind::X, k);
        SMat sq = xk * xk;
        SMat prod = SMat::identity(m.dim(), m.p);
        for (const Scalar& q : qs)
            prod = prod * (sq - SMat::identity(m.dim(), m.p).scale(q));
        if (!prod.is_zero()) return false;
    }
    return true;
}

bool is_x_semisimple(const SuperModule& m) {
    auto wd = weight_decomposition(m);
    for (int k = 1; k <= m.n; ++k) {
        std::vector<Scalar> lambdas;
        auto push = [&](const Scalar& s) {
            if (std::find(lambdas.begin(), lambdas.end(), s) == lambdas.end())
                lambdas.push_back(s);
        };
        for (const auto& [w, d] : wd) {
            Scalar root = scalar_sqrt(q_of(w.entries[k - 1], m.p));
            push(root);
            push(-root);
        }
        const SMat& xk = m.gen(Generator::Kind::X, k);
        SMat prod = SMat::identity(m.dim(), m.p);
        for (const Scalar& lam : lambdas)
            prod = prod * (xk - SMat::identity(m.dim(), m.p).scale(lam));
        if (!prod.is_zero()) return false;
    }
    return true;
}

EndoReport end_dimension(const SuperModule& m) {
    int dim = m.dim();
    std::uint32_t p = m.p;

    // Signature blocks forced by commuting with diagonal x-matrices.
    std::vector<int> block_id(dim, 0);
    bool have_diag_x = m.n > 0;
    for (int k = 1; k <= m.n && have_diag_x; ++k)
        have_diag_x = m.has_gen(Generator::Kind::X, k) &&
                      m.gen(Generator::Kind::X, k).is_diagonal();
    if (have_diag_x) {
        std::map<std::vector<Scalar>, int> sig_ids;
        for (int v = 0; v < dim; ++v) {
            std::vector<Scalar> sig;
            for (int k = 1; k <= m.n; ++k)
                sig.push_back(m.gen(Generator::Kind::X, k).get(v, v));
            auto [it, fresh] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size()));
            block_id[v] = it->second;
        }
    }

    // Constraint generators; x is implied by the block structure when the
    // blocks came from diagonal x-matrices.
    std::vector<std::pair<SMat, int>> gens;  // (matrix, parity of generator)
    for (const auto& [name, mat] : m.action) {
        if (have_diag_x && name[0] == 'x') continue;
        gens.emplace_back(mat, name[0] == 'c' ? 1 : 0);
    }

    EndoReport report;
    for (int tpar = 0; tpar < 2; ++tpar) {
        std::vector<std::pair<int, int>> unknowns;
        std::map<std::pair<int, int>, int> unknown_id;
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                if (block_id[r] == block_id[c] &&
                    (m.parity[r] ^ m.parity[c]) == tpar) {
                    unknown_id[{r, c}] = static_cast<int>(unknowns.size());
                    unknowns.emplace_back(r, c);
                }
        std::map<std::pair<int, int>, SparseRow> eqs;
        auto accumulate = [&](std::pair<int, int> key, int u, const Scalar& v) {
            auto& row = eqs[key];
            auto it = row.find(u);
            if (it == row.end())
                row.emplace(u, v);
            else
                it->second = it->second + v;
        };
        // One equation block per generator: T g - (-1)^{tpar*gpar} g T = 0.
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            const SMat& g = gens[gi].first;
            bool negate = (tpar & gens[gi].second) != 0;
            std::vector<std::vector<std::pair<int, Scalar>>> col_entries(dim);
            for (int r = 0; r < dim; ++r)
                for (const auto& [c, v] : g.row(r)) col_entries[c].emplace_back(r, v);
            int base_key = static_cast<int>(gi) * dim;
            for (size_t u = 0; u < unknowns.size(); ++u) {
                auto [r, c] = unknowns[u];
                for (const auto& [j, v] : g.row(c))
                    accumulate({base_key + r, j}, static_cast<int>(u), v);
                for (const auto& [i, v] : col_entries[r])
                    accumulate({base_key + i, c}, static_cast<int>(u),
                               negate ? v : -v);
            }
        }
        std::vector<SparseRow> rows;
        rows.reserve(eqs.size());
        for (auto& [key, row] : eqs) {
            SparseRow clean;
            for (const auto& [u, v] : row)
                if (!v.is_zero()) clean.emplace(u, v);
            if (!clean.empty()) rows.push_back(std::move(clean));
        }
        int dim_solutions =
            static_cast<int>(unknowns.size()) - rank_of_rows(std::move(rows), p);
        if (tpar == 0)
            report.even_dim = dim_solutions;
        else
            report.odd_dim = dim_solutions;
    }
    return report;
}

PhiHatResult apply_phi_hat(const SuperModule& m, const WeightVector& w, int k) {
    if (!is_admissible(w, k))
        throw ScalarError("transposition not admissible for " + w.str());
    if (m.weights.empty())
        throw ScalarError("module carries no weight metadata");
    PhiHatResult res;
    WeightVector target = apply_transposition(w, k);
    for (int v = 0; v < m.dim(); ++v) {
        if (m.weights[v].entries == w.entries) res.source.push_back(v);
        if (m.weights[v].entries == target.entries) res.target.push_back(v);
    }
    if (res.source.empty()) throw ScalarError("empty weight space for " + w.str());

    Scalar denom = q_of(w.entries[k - 1], m.p) - q_of(w.entries[k], m.p);
    SMat xi = xi_matrix(m.gen(Generator::Kind::X, k), m.gen(Generator::Kind::X, k + 1),
                        m.gen(Generator::Kind::C, k), m.gen(Generator::Kind::C, k + 1),
                        denom);
    Scalar om_inv = omega_scalar(w.entries[k - 1], w.entries[k], m.p).inverse();
    SMat full = (m.gen(Generator::Kind::S, k) - xi).scale(om_inv);

    std::vector<int> where(m.dim(), -1);
    for (size_t i = 0; i < res.target.size(); ++i) where[res.target[i]] = i;
    res.matrix = SMat(static_cast<int>(res.target.size()),
                      static_cast<int>(res.source.size()), m.p);
    for (size_t cs = 0; cs < res.source.size(); ++cs) {
        for (int r = 0; r < m.dim(); ++r) {
            Scalar v = full.get(r, res.source[cs]);
            if (v.is_zero()) continue;
            if (where[r] < 0)
                throw ScalarError("image leaves the swapped weight space");
            res.matrix.set(where[r], static_cast<int>(cs), v);
        }
    }
    return res;
}

}  // namespace hc
