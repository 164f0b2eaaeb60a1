#include "hc/pbw.hpp"

#include <sstream>

namespace hc {

std::string PBWMonomial::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        if (any) os << " ";
        any = true;
        os << "x" << i + 1;
        if (alpha[i] > 1) os << "^" << alpha[i];
    }
    for (size_t i = 0; i < beta.size(); ++i) {
        if (!beta[i]) continue;
        if (any) os << " ";
        any = true;
        os << "c" << i + 1;
    }
    if (!w.is_identity()) {
        if (any) os << " ";
        any = true;
        for (int k : w.reduced_word()) os << "s" << k + 1;
    }
    if (!any) os << "1";
    return os.str();
}

PBWElement PBWElement::unit(int n, std::uint32_t p) {
    return monomial(PBWMonomial::unit(n), Scalar::one(p), p);
}

PBWElement PBWElement::monomial(const PBWMonomial& m, const Scalar& coeff,
                                std::uint32_t p) {
    PBWElement e(static_cast<int>(m.alpha.size()), p);
    e.add_term(m, coeff);
    return e;
}

void PBWElement::add_term(const PBWMonomial& m, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
    PBWElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
    PBWElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

PBWElement PBWElement::scale(const Scalar& s) const {
    PBWElement r(n_, p_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

bool PBWElement::operator==(const PBWElement& o) const { return terms_ == o.terms_; }

PBWElement PBWElement::mul_gen_left(const Generator& g) const {
    PBWElement out(n_, p_);
    int j = g.index - 1;
    switch (g.kind) {
        case Generator::Kind::X: {
            if (j < 0 || j >= n_) throw ScalarError("x index out of range");
            for (const auto& [m, c] : terms_) {
                PBWMonomial m2 = m;
                ++m2.alpha[j];
                out.add_term(m2, c);
            }
            break;
        }
        case Generator::Kind::C: {
            if (j < 0 || j >= n_) throw ScalarError("c index out of range");
            for (const auto& [m, c] : terms_) {
                // c_k past x^alpha flips sign alpha_k times; past the leading
                // Clifford factors once per set bit below k.
                int sign = m.alpha[j] % 2;
                for (int i = 0; i < j; ++i) sign ^= m.beta[i] ? 1 : 0;
                PBWMonomial m2 = m;
                m2.beta[j] ^= 1;
                out.add_term(m2, sign ? -c : c);
            }
            break;
        }
        case Generator::Kind::S: {
            if (j < 0 || j + 1 >= n_) throw ScalarError("s index out of range");
            for (const auto& [m, c] : terms_) out = out + s_left(g.index, m, c);
            break;
        }
    }
    return out;
}

PBWElement PBWElement::s_left(int k, const PBWMonomial& m, const Scalar& coeff) const {
    int j = k - 1;
    if (m.alpha[j] == 0 && m.alpha[j + 1] == 0) {
        // s_k commutes with the remaining x's, swaps the two Clifford slots
        // (with a sign when both are occupied), and absorbs into the
        // permutation.
        PBWMonomial m2 = m;
        std::swap(m2.beta[j], m2.beta[j + 1]);
        m2.w = m.w.swap_values(j);
        bool neg = m.beta[j] && m.beta[j + 1];
        return monomial(m2, neg ? -coeff : coeff, p_);
    }
    Generator sk = Generator::s(k);
    if (m.alpha[j] > 0) {
        // s_k x_k = x_{k+1} s_k - (1 + c_k c_{k+1})
        PBWMonomial base = m;
        --base.alpha[j];
        PBWElement rest = monomial(base, coeff, p_);
        PBWElement main = rest.mul_gen_left(sk).mul_gen_left(Generator::x(k + 1));
        PBWElement cc =
            rest.mul_gen_left(Generator::c(k + 1)).mul_gen_left(Generator::c(k));
        return main - rest - cc;
    }
    // s_k x_{k+1} = x_k s_k + (1 - c_k c_{k+1})
    PBWMonomial base = m;
    --base.alpha[j + 1];
    PBWElement rest = monomial(base, coeff, p_);
    PBWElement main = rest.mul_gen_left(sk).mul_gen_left(Generator::x(k));
    PBWElement cc =
        rest.mul_gen_left(Generator::c(k + 1)).mul_gen_left(Generator::c(k));
    return main + rest - cc;
}

PBWElement PBWElement::operator*(const PBWElement& o) const {
    if (n_ != o.n_) throw ScalarError("rank mismatch in product");
    if (p_ != o.p_) throw ScalarError("characteristic mismatch in product");
    PBWElement out(n_, p_);
    for (const auto& [m, c] : terms_) {
        // m * o = x^alpha c^beta (w * o); apply the factors right to left.
        PBWElement acc = o;
        std::vector<int> word = m.w.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = acc.mul_gen_left(Generator::s(*it + 1));
        for (int i = n_ - 1; i >= 0; --i)
            if (m.beta[i]) acc = acc.mul_gen_left(Generator::c(i + 1));
        for (int i = 0; i < n_; ++i)
            for (int e = 0; e < m.alpha[i]; ++e)
                acc = acc.mul_gen_left(Generator::x(i + 1));
        out = out + acc.scale(c);
    }
    return out;
}

int PBWElement::parity() const {
    if (terms_.empty()) return 0;
    int par = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (char b : m.beta) s += b;
        if (par < 0)
            par = s % 2;
        else if (par != s % 2)
            throw ScalarError("inhomogeneous element has no parity");
    }
    return par;
}

bool PBWElement::x_free() const {
    for (const auto& [m, c] : terms_)
        for (int a : m.alpha)
            if (a) return false;
    return true;
}

std::string PBWElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ") " << m.str();
    }
    return os.str();
}

PBWElement normal_form(const std::vector<Generator>& word, int n, std::uint32_t p) {
    PBWElement e = PBWElement::unit(n, p);
    for (auto it = word.rbegin(); it != word.rend(); ++it) e = e.mul_gen_left(*it);
    return e;
}

PBWElement intertwiner(int k, int n, std::uint32_t p) {
    if (k < 1 || k >= n) throw ScalarError("intertwiner index out of range");
    using G = Generator;
    auto nf = [&](std::vector<Generator> w) { return normal_form(w, n, p); };
    PBWElement e = nf({G::s(k), G::x(k), G::x(k)}) -
                   nf({G::s(k), G::x(k + 1), G::x(k + 1)}) + nf({G::x(k)}) +
                   nf({G::x(k + 1)}) + nf({G::c(k), G::c(k + 1), G::x(k)}) -
                   nf({G::c(k), G::c(k + 1), G::x(k + 1)});
    return e;
}

PBWElement jucys_murphy(int k, int n, std::uint32_t p) {
    if (k < 1 || k > n) throw ScalarError("element index out of range");
    PBWElement e = PBWElement::zero(n, p);
    for (int j = 1; j < k; ++j) {
        PBWMonomial plain = PBWMonomial::unit(n);
        plain.w = Perm::transposition(n, j - 1, k - 1);
        e.add_term(plain, Scalar::one(p));
        PBWMonomial pair = plain;
        pair.beta[j - 1] = 1;
        pair.beta[k - 1] = 1;
        e.add_term(pair, Scalar::one(p));
    }
    return e;
}

std::vector<IdentityCheck> check_intertwiner_identities(int n, std::uint32_t p) {
    std::vector<IdentityCheck> out;
    auto phi = [&](int k) { return intertwiner(k, n, p); };
    auto xk = [&](int k) { return normal_form({Generator::x(k)}, n, p); };
    auto ck = [&](int k) { return normal_form({Generator::c(k)}, n, p); };
    Scalar two = Scalar::from_int(p, 2);

    for (int k = 1; k < n; ++k) {
        PBWElement f = phi(k);
        PBWElement a = xk(k) * xk(k), b = xk(k + 1) * xk(k + 1);
        PBWElement rhs = (a + b).scale(two) - (a - b) * (a - b);
        out.push_back({"phi" + std::to_string(k) + ": square evaluation",
                       f * f == rhs});
        out.push_back({"phi" + std::to_string(k) + ": x exchange",
                       f * xk(k) == xk(k + 1) * f && f * xk(k + 1) == xk(k) * f});
        out.push_back({"phi" + std::to_string(k) + ": c exchange",
                       f * ck(k) == ck(k + 1) * f && f * ck(k + 1) == ck(k) * f});
        bool fixes = true;
        for (int l = 1; l <= n; ++l) {
            if (l == k || l == k + 1) continue;
            fixes = fixes && f * xk(l) == xk(l) * f && f * ck(l) == ck(l) * f;
        }
        out.push_back({"phi" + std::to_string(k) + ": fixes distant generators",
                       fixes});
    }
    for (int a = 1; a < n; ++a)
        for (int b = a + 2; b < n; ++b)
            out.push_back({"phi" + std::to_string(a) + " phi" + std::to_string(b) +
                               ": commute",
                           phi(a) * phi(b) == phi(b) * phi(a)});
    for (int k = 1; k + 1 < n; ++k)
        out.push_back({"phi" + std::to_string(k) + ": braid",
                       phi(k) * phi(k + 1) * phi(k) ==
                           phi(k + 1) * phi(k) * phi(k + 1)});
    return out;
}

}  // namespace hc
