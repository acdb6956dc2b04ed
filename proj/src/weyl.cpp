#include "demkit/weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace demkit {

WeylElement WeylElement::identity(CartanPtr c) {
    int n = c->rank();
    std::vector<int> m(static_cast<size_t>(n) * n, 0);
    for (int k = 0; k < n; ++k) m[static_cast<size_t>(k) * n + k] = 1;
    return WeylElement(std::move(c), std::move(m));
}

WeylElement WeylElement::simple(CartanPtr c, int i) {
    int n = c->rank();
    Weight alpha = c->simple_root(i);
    std::vector<int> m(static_cast<size_t>(n) * n, 0);
    // column j is s_i(omega_j) = omega_j - delta_{ij} alpha_i
    for (int k = 0; k < n; ++k) m[static_cast<size_t>(k) * n + k] = 1;
    for (int k = 0; k < n; ++k) m[static_cast<size_t>(k) * n + (i - 1)] -= alpha.c[k];
    return WeylElement(std::move(c), std::move(m));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    int n = cartan_->rank();
    std::vector<int> r(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int mik = m_[static_cast<size_t>(i) * n + k];
            if (mik == 0) continue;
            for (int j = 0; j < n; ++j)
                r[static_cast<size_t>(i) * n + j] += mik * o.m_[static_cast<size_t>(k) * n + j];
        }
    return WeylElement(cartan_, std::move(r));
}

std::vector<int> WeylElement::apply_vec(const std::vector<int>& v) const {
    int n = cartan_->rank();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector rank mismatch");
    std::vector<int> r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += m_[static_cast<size_t>(i) * n + j] * v[j];
    return r;
}

Weight WeylElement::apply(const Weight& lam) const { return Weight(apply_vec(lam.c)); }

int WeylElement::length() const {
    int count = 0;
    for (int k = 0; k < cartan_->num_positive_roots(); ++k)
        if (cartan_->root_sign(apply_vec(cartan_->positive_root_weight_coords(k))) < 0) ++count;
    return count;
}

std::set<int> WeylElement::right_descents() const {
    std::set<int> d;
    for (int i = 1; i <= cartan_->rank(); ++i)
        if (cartan_->root_sign(apply_vec(cartan_->simple_root(i).c)) < 0) d.insert(i);
    return d;
}

std::set<int> WeylElement::left_descents() const { return inverse().right_descents(); }

WeylElement WeylElement::inverse() const {
    ReducedWord w = reduce_word(*this);
    WeylElement r = identity(cartan_);
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = r * simple(cartan_, *it);
    return r;
}

bool WeylElement::is_identity() const {
    return *this == identity(cartan_);
}

ReducedWord reduce_word(const WeylElement& w) {
    ReducedWord rev;
    WeylElement cur = w;
    while (true) {
        auto d = cur.right_descents();
        if (d.empty()) break;
        int i = *d.begin();
        rev.push_back(i);
        cur = cur * WeylElement::simple(cur.cartan(), i);
    }
    if (!cur.is_identity()) throw std::logic_error("descent stripping did not terminate");
    return ReducedWord(rev.rbegin(), rev.rend());
}

WeylElement word_product(CartanPtr c, const ReducedWord& word) {
    WeylElement r = WeylElement::identity(c);
    for (int i : word) r = r * WeylElement::simple(c, i);
    return r;
}

std::vector<ReducedWord> enumerate_reduced_words(const WeylElement& w) {
    if (w.is_identity()) return {ReducedWord{}};
    std::vector<ReducedWord> out;
    for (int i : w.right_descents()) {
        WeylElement shorter = w * WeylElement::simple(w.cartan(), i);
        for (auto word : enumerate_reduced_words(shorter)) {
            word.push_back(i);
            out.push_back(std::move(word));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

WeylElement longest_element(CartanPtr c) {
    WeylElement w = WeylElement::identity(c);
    const int n = c->rank();
    while (true) {
        auto d = w.right_descents();
        if (static_cast<int>(d.size()) == n) return w;
        for (int i = 1; i <= n; ++i)
            if (!d.count(i)) {
                w = w * WeylElement::simple(c, i);
                break;
            }
    }
}

std::vector<WeylElement> enumerate_weyl_group(CartanPtr c) {
    std::set<WeylElement> seen;
    std::queue<WeylElement> q;
    WeylElement id = WeylElement::identity(c);
    seen.insert(id);
    q.push(id);
    while (!q.empty()) {
        WeylElement w = q.front();
        q.pop();
        for (int i = 1; i <= c->rank(); ++i) {
            WeylElement v = w * WeylElement::simple(c, i);
            if (seen.insert(v).second) q.push(v);
        }
    }
    std::vector<WeylElement> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a < b;
    });
    return out;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
    // lifting property: for s a right descent of w,
    // u <= w iff (us <= ws when s is a descent of u, else u <= ws)
    if (u.is_identity()) return true;
    int lu = u.length(), lw = w.length();
    if (lu > lw) return false;
    if (lu == lw) return u == w;
    int i = *w.right_descents().begin();
    WeylElement s = WeylElement::simple(w.cartan(), i);
    WeylElement ws = w * s;
    if (u.right_descents().count(i)) return bruhat_leq(u * s, ws);
    return bruhat_leq(u, ws);
}

std::set<int> stabilizer_generators(CartanPtr c, const Weight& lam) {
    if (!lam.dominant())
        throw std::invalid_argument("stabilizer generators require a dominant weight");
    std::set<int> J;
    for (int i = 1; i <= c->rank(); ++i)
        if (c->pairing(i, lam) == 0) J.insert(i);
    return J;
}

WeylElement min_coset_rep(WeylElement w, const Weight& lam) {
    auto J = stabilizer_generators(w.cartan(), lam);
    bool changed = true;
    while (changed) {
        changed = false;
        auto d = w.right_descents();
        for (int i : J)
            if (d.count(i)) {
                w = w * WeylElement::simple(w.cartan(), i);
                changed = true;
                break;
            }
    }
    return w;
}

WeylElement max_coset_rep(WeylElement w, const Weight& lam) {
    auto J = stabilizer_generators(w.cartan(), lam);
    bool changed = true;
    while (changed) {
        changed = false;
        auto d = w.right_descents();
        for (int i : J)
            if (!d.count(i)) {
                w = w * WeylElement::simple(w.cartan(), i);
                changed = true;
                break;
            }
    }
    return w;
}

bool parabolic_membership(const WeylElement& w, const std::set<int>& J) {
    for (int i : reduce_word(w))
        if (!J.count(i)) return false;
    return true;
}

bool kouno_criterion(const Weight& lam, const WeylElement& w,
                     const Weight& mu, const WeylElement& u) {
    WeylElement sigma = max_coset_rep(u, mu);
    std::set<int> J = sigma.left_descents();
    return parabolic_membership(min_coset_rep(w, lam), J);
}

}  // namespace demkit
