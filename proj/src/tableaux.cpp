#include "demkit/tableaux.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace demkit {

std::string Tableau::str() const {
    if (rows.empty()) return "[]";
    std::ostringstream os;
    os << "[";
    for (size_t r = 0; r < rows.size(); ++r) {
        os << (r ? ",[" : "[");
        for (size_t c = 0; c < rows[r].size(); ++c) os << (c ? "," : "") << rows[r][c];
        os << "]";
    }
    os << "]";
    return os.str();
}

Weight Tableau::weight(int rank) const {
    std::vector<int> count(rank + 2, 0);
    for (const auto& row : rows)
        for (int x : row) count.at(x) += 1;
    std::vector<int> coords(rank);
    for (int i = 1; i <= rank; ++i) coords[i - 1] = count[i] - count[i + 1];
    return Weight(coords);
}

std::vector<int> shape_from_weight(const Weight& lam) {
    if (!lam.dominant()) throw std::invalid_argument("weight is not dominant");
    int height = 0;
    for (int j = 1; j <= lam.rank(); ++j)
        if (lam.c[j - 1] > 0) height = j;
    std::vector<int> rows(height);
    for (int r = 1; r <= height; ++r) {
        int len = 0;
        for (int j = r; j <= lam.rank(); ++j) len += lam.c[j - 1];
        rows[r - 1] = len;
    }
    return rows;
}

namespace {

// reading word: rows top to bottom, each row right to left; cell refs kept so
// the operators know which entry to change
struct ReadingWord {
    std::vector<int> letters;
    std::vector<std::pair<int, int>> cells;
};

ReadingWord reading_word(const Tableau& t) {
    ReadingWord w;
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (int c = static_cast<int>(t.rows[r].size()) - 1; c >= 0; --c) {
            w.letters.push_back(t.rows[r][c]);
            w.cells.emplace_back(static_cast<int>(r), c);
        }
    return w;
}

// unmatched positions after cancelling (letter i, letter i+1) pairs:
// opens in word order, closes in word order
struct Signature {
    std::vector<int> opens, closes;
};

Signature signature(const ReadingWord& w, int color) {
    Signature s;
    for (size_t p = 0; p < w.letters.size(); ++p) {
        if (w.letters[p] == color) {
            s.opens.push_back(static_cast<int>(p));
        } else if (w.letters[p] == color + 1) {
            if (!s.opens.empty())
                s.opens.pop_back();
            else
                s.closes.push_back(static_cast<int>(p));
        }
    }
    return s;
}

std::optional<Tableau> act_f(const Tableau& t, int color) {
    auto w = reading_word(t);
    auto s = signature(w, color);
    if (s.opens.empty()) return std::nullopt;
    auto [r, c] = w.cells[s.opens.front()];  // leftmost unmatched open
    Tableau out = t;
    out.rows[r][c] = color + 1;
    return out;
}

void fill_cells(const std::vector<int>& shape, int max_letter, Tableau& work, int r, int c,
                std::vector<Tableau>& out) {
    if (r == static_cast<int>(shape.size())) {
        out.push_back(work);
        return;
    }
    int nr = r, nc = c + 1;
    if (nc == shape[r]) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, work.rows[r][c - 1]);
    if (r > 0 && c < static_cast<int>(work.rows[r - 1].size()))
        lo = std::max(lo, work.rows[r - 1][c] + 1);
    for (int x = lo; x <= max_letter; ++x) {
        work.rows[r][c] = x;
        fill_cells(shape, max_letter, work, nr, nc, out);
    }
}

std::vector<Tableau> all_ssyt(const std::vector<int>& shape, int max_letter) {
    if (shape.empty()) return {Tableau{}};
    Tableau work;
    for (int len : shape) work.rows.emplace_back(len, 0);
    std::vector<Tableau> out;
    fill_cells(shape, max_letter, work, 0, 0, out);
    return out;
}

}  // namespace

TypeACrystal build_typeA_labeled(const CartanPtr& c, const Weight& lam) {
    if (c->type().family != Family::A)
        throw std::invalid_argument("tableau model only covers type A");
    if (lam.rank() != c->rank()) throw std::invalid_argument("weight rank mismatch");
    auto shape = shape_from_weight(lam);
    auto tabs = all_ssyt(shape, c->rank() + 1);

    std::map<Tableau, int> index;
    for (size_t t = 0; t < tabs.size(); ++t) index[tabs[t]] = static_cast<int>(t);

    std::vector<Weight> wts;
    wts.reserve(tabs.size());
    for (const auto& t : tabs) wts.push_back(t.weight(c->rank()));

    std::vector<FEdge> edges;
    for (size_t t = 0; t < tabs.size(); ++t)
        for (int i = 1; i <= c->rank(); ++i)
            if (auto img = act_f(tabs[t], i)) {
                auto it = index.find(*img);
                if (it == index.end())
                    throw std::logic_error("operator left the semistandard family at " +
                                           tabs[t].str());
                edges.push_back({i, static_cast<int>(t), it->second});
            }

    TypeACrystal out;
    out.graph = CrystalGraph::create(c, std::move(wts), edges, Provenance::Tableaux);
    out.tableaux = std::move(tabs);
    return out;
}

CrystalPtr build_typeA(const CartanPtr& c, const Weight& lam) {
    return build_typeA_labeled(c, lam).graph;
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

__int128 checked_mul(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("dimension overflows");
    return r;
}

}  // namespace

long long dimension_oracle(const CartanPtr& c, const Weight& lam) {
    if (lam.rank() != c->rank()) throw std::invalid_argument("weight rank mismatch");
    if (!lam.dominant()) throw std::invalid_argument("weight is not dominant");
    const Weight shifted = lam + c->rho();
    __int128 num = 1, den = 1;
    for (int k = 0; k < c->num_positive_roots(); ++k) {
        __int128 a = c->posroot_coroot_pairing(k, shifted);
        __int128 b = c->posroot_coroot_pairing(k, c->rho());
        __int128 g = gcd128(a, den);
        a /= g;
        den /= g;
        g = gcd128(num, b);
        num /= g;
        b /= g;
        num = checked_mul(num, a);
        den = checked_mul(den, b);
    }
    if (den == 0 || num % den != 0) throw std::logic_error("dimension formula not integral");
    __int128 dim = num / den;
    if (dim > std::numeric_limits<long long>::max())
        throw std::overflow_error("dimension overflows");
    return static_cast<long long>(dim);
}

}  // namespace demkit
