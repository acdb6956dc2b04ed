#include "demkit/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace demkit {

bool Weight::dominant() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

bool Weight::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) {
        if (k) os << ',';
        os << c[k];
    }
    os << ')';
    return os.str();
}

static void require_same_rank(const Weight& a, const Weight& b) {
    if (a.c.size() != b.c.size())
        throw std::invalid_argument("weight rank mismatch");
}

Weight Weight::operator+(const Weight& o) const {
    require_same_rank(*this, o);
    Weight r = *this;
    for (size_t k = 0; k < c.size(); ++k) r.c[k] += o.c[k];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    require_same_rank(*this, o);
    Weight r = *this;
    for (size_t k = 0; k < c.size(); ++k) r.c[k] -= o.c[k];
    return r;
}

Weight Weight::operator*(int k) const {
    Weight r = *this;
    for (auto& x : r.c) x *= k;
    return r;
}

std::string TypeLabel::str() const {
    static const char* names = "ABCDEFG";
    return std::string(1, names[static_cast<int>(family)]) + std::to_string(rank);
}

TypeLabel TypeLabel::parse(std::string_view s) {
    if (s.size() < 2) throw std::invalid_argument("bad type label '" + std::string(s) + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    const std::string fams = "ABCDEFG";
    auto pos = fams.find(fam);
    if (pos == std::string::npos)
        throw std::invalid_argument("unknown type family in '" + std::string(s) + "'");
    int rank = 0;
    for (size_t k = 1; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument("bad rank in type label '" + std::string(s) + "'");
        rank = rank * 10 + (s[k] - '0');
    }
    TypeLabel t{static_cast<Family>(pos), rank};
    // legality per family
    bool ok = false;
    switch (t.family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok) throw std::invalid_argument("unsupported type '" + t.str() + "'");
    return t;
}

namespace {

std::vector<int> cartan_matrix_for(const TypeLabel& t) {
    const int n = t.rank;
    std::vector<int> a(static_cast<size_t>(n) * n, 0);
    auto at = [&](int i, int j) -> int& { return a[static_cast<size_t>(i - 1) * n + (j - 1)]; };
    for (int i = 1; i <= n; ++i) at(i, i) = 2;
    auto bond = [&](int i, int j, int aij, int aji) { at(i, j) = aij; at(j, i) = aji; };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
    };
    switch (t.family) {
        case Family::A:
            chain(1, n);
            break;
        case Family::B:  // alpha_n short
            chain(1, n - 1);
            bond(n - 1, n, -1, -2);
            break;
        case Family::C:  // alpha_n long
            chain(1, n - 1);
            bond(n - 1, n, -2, -1);
            break;
        case Family::D:
            chain(1, n - 2);
            bond(n - 2, n - 1, -1, -1);
            bond(n - 2, n, -1, -1);
            break;
        case Family::E:
            // Bourbaki: 1-3-4-5-6(-7(-8)) with 2 attached to 4
            bond(1, 3, -1, -1);
            bond(3, 4, -1, -1);
            bond(2, 4, -1, -1);
            for (int i = 4; i < n; ++i) bond(i, i + 1, -1, -1);
            break;
        case Family::F:  // alpha_1, alpha_2 long
            bond(1, 2, -1, -1);
            bond(2, 3, -1, -2);
            bond(3, 4, -1, -1);
            break;
        case Family::G:  // alpha_1 short: <alpha_1^vee, alpha_2> = -3
            bond(1, 2, -3, -1);
            break;
    }
    return a;
}

}  // namespace

CartanData::CartanData(TypeLabel t, std::vector<int> m)
    : label_(t), n_(t.rank), a_(std::move(m)) {
    // symmetrizer: minimal positive integers with d_i a_{ij} = d_j a_{ji},
    // found by propagating exact ratios along the Dynkin graph
    std::vector<long long> num(n_, 0), den(n_, 1);
    num[0] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j = 0; j < n_; ++j) {
            int aij = a_[static_cast<size_t>(i) * n_ + j];
            int aji = a_[static_cast<size_t>(j) * n_ + i];
            if (i == j || aij == 0) continue;
            if (num[j] != 0) continue;
            // d_j = d_i * aij / aji
            num[j] = num[i] * aij;
            den[j] = den[i] * aji;
            if (num[j] < 0) { num[j] = -num[j]; }
            if (den[j] < 0) { den[j] = -den[j]; }
            long long g = std::gcd(num[j], den[j]);
            num[j] /= g;
            den[j] /= g;
            q.push(j);
        }
    }
    long long l = 1;
    for (int i = 0; i < n_; ++i) {
        if (num[i] == 0) throw std::logic_error("disconnected Dynkin diagram");
        l = std::lcm(l, den[i]);
    }
    d_.resize(n_);
    long long g_all = 0;
    for (int i = 0; i < n_; ++i) g_all = std::gcd(g_all, num[i] * (l / den[i]));
    for (int i = 0; i < n_; ++i) d_[i] = static_cast<int>(num[i] * (l / den[i]) / g_all);
    build_roots();
}

void CartanData::build_roots() {
    // saturate {alpha_j} under simple reflections in simple-root coordinates
    std::set<std::vector<int>> all;
    std::queue<std::vector<int>> q;
    for (int j = 0; j < n_; ++j) {
        std::vector<int> e(n_, 0);
        e[j] = 1;
        all.insert(e);
        q.push(e);
    }
    while (!q.empty()) {
        auto c = q.front();
        q.pop();
        for (int i = 0; i < n_; ++i) {
            long long pair = 0;
            for (int j = 0; j < n_; ++j) pair += static_cast<long long>(a_[static_cast<size_t>(i) * n_ + j]) * c[j];
            auto r = c;
            r[i] -= static_cast<int>(pair);
            if (all.insert(r).second) q.push(r);
        }
    }
    for (const auto& c : all) {
        bool pos = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
        if (!pos) continue;
        pos_roots_.push_back(c);
        std::vector<int> wt(n_, 0);
        for (int k = 0; k < n_; ++k)
            for (int j = 0; j < n_; ++j) wt[k] += a_[static_cast<size_t>(k) * n_ + j] * c[j];
        pos_roots_wt_.push_back(wt);
        long long norm = 0;  // (beta, beta) with (alpha_j, alpha_k) = d_j a_{jk}
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                norm += static_cast<long long>(c[j]) * c[k] * d_[j] * a_[static_cast<size_t>(j) * n_ + k];
        pos_root_norm_.push_back(norm);
        sign_by_wt_coords_[wt] = +1;
        std::vector<int> neg(n_);
        for (int k = 0; k < n_; ++k) neg[k] = -wt[k];
        sign_by_wt_coords_[neg] = -1;
    }
}

CartanPtr CartanData::make(TypeLabel t) {
    return CartanPtr(new CartanData(t, cartan_matrix_for(t)));
}

CartanPtr CartanData::make(std::string_view label) { return make(TypeLabel::parse(label)); }

int CartanData::a(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::out_of_range("Cartan matrix index out of range");
    return a_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

int CartanData::pairing(int i, const Weight& lam) const {
    if (i < 1 || i > n_) throw std::out_of_range("simple coroot index out of range");
    if (lam.rank() != n_) throw std::invalid_argument("weight rank mismatch");
    return lam.c[i - 1];
}

Weight CartanData::simple_root(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("simple root index out of range");
    std::vector<int> v(n_);
    for (int k = 0; k < n_; ++k) v[k] = a_[static_cast<size_t>(k) * n_ + (j - 1)];
    return Weight(v);
}

Weight CartanData::reflect(int i, const Weight& lam) const {
    int m = pairing(i, lam);
    return lam - simple_root(i) * m;
}

const std::vector<int>& CartanData::positive_root_weight_coords(int k) const {
    return pos_roots_wt_.at(k);
}

long long CartanData::posroot_coroot_pairing(int k, const Weight& lam) const {
    if (lam.rank() != n_) throw std::invalid_argument("weight rank mismatch");
    const auto& c = pos_roots_.at(k);
    long long inner = 0;  // (beta, lambda) = sum_j c_j d_j lam_j
    for (int j = 0; j < n_; ++j) inner += static_cast<long long>(c[j]) * d_[j] * lam.c[j];
    long long norm = pos_root_norm_[k];
    if ((2 * inner) % norm != 0)
        throw std::logic_error("coroot pairing is not integral");
    return 2 * inner / norm;
}

int CartanData::root_sign(const std::vector<int>& wt) const {
    auto it = sign_by_wt_coords_.find(wt);
    return it == sign_by_wt_coords_.end() ? 0 : it->second;
}

Weight CartanData::rho() const { return Weight(std::vector<int>(n_, 1)); }

Weight CartanData::fundamental_weight(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("fundamental weight index out of range");
    std::vector<int> v(n_, 0);
    v[i - 1] = 1;
    return Weight(v);
}

}  // namespace demkit
