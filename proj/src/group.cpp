#include "unitsep/group.hpp"

#include <algorithm>
#include <bit>

namespace unitsep {

int Bitset::count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
}

bool Bitset::subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] & ~o.w[i]) return false;
    return true;
}

std::size_t Bitset::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : w) h = (h ^ x) * 0x100000001b3ull;
    return h;
}

std::vector<int> Bitset::elements() const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

FiniteGroup::FiniteGroup(int n, Table mul, std::string label)
    : n_(n), mul_(std::move(mul)), label_(std::move(label)) {}

void FiniteGroup::build_inverses() {
    // identity must be element 0 by the time this runs
    for (int a = 0; a < n_; ++a)
        if (op(0, a) != a || op(a, 0) != a) throw NoIdentity();
    inv_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
        int found = -1;
        for (int b = 0; b < n_; ++b)
            if (op(a, b) == 0 && op(b, a) == 0) {
                found = b;
                break;
            }
        if (found < 0) throw NoInverse(a);
        inv_[a] = std::uint16_t(found);
    }
}

void FiniteGroup::validate_associativity() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            int ab = op(a, b);
            for (int c = 0; c < n_; ++c)
                if (op(ab, c) != op(a, op(b, c))) throw NotAssociative(a, b, c);
        }
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table,
                                     const std::string& label) {
    int n = int(table.size());
    if (n == 0 || n > 65535) throw BadParameter("table size out of range");
    for (auto& row : table) {
        if (int(row.size()) != n) throw BadParameter("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw BadParameter("table entry out of range");
    }
    // locate the identity and relabel it to index 0
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (table[cand][a] != a || table[a][cand] != a) ok = false;
        if (ok) e = cand;
    }
    if (e < 0) throw NoIdentity();
    std::vector<int> relab(n), unlab(n);
    for (int i = 0; i < n; ++i) relab[i] = unlab[i] = i;
    std::swap(relab[0], relab[e]); // relab: new index -> old index
    std::swap(unlab[0], unlab[e]);
    Table mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[std::size_t(a) * n + b] = std::uint16_t(unlab[table[relab[a]][relab[b]]]);
    FiniteGroup G(n, std::move(mul), label);
    G.validate_associativity();
    G.build_inverses();
    return G;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw BadParameter("cyclic(n) requires n >= 1");
    Table mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[std::size_t(a) * n + b] = std::uint16_t((a + b) % n);
    FiniteGroup G(n, std::move(mul), "C" + std::to_string(n));
    G.build_inverses();
    if (n > 1) G.set_generators({{"a", 1}});
    return G;
}

FiniteGroup FiniteGroup::dihedral(int m) {
    if (m < 2 || m % 2 != 0) throw BadParameter("dihedral(m) requires even m >= 2");
    int n = m / 2; // rotation order
    // elements: a^i (i<n), a^i b (n+i); b a b^-1 = a^-1
    Table mul(std::size_t(m) * m);
    auto idx = [n](int i, int r) { return r ? n + i : i; };
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < 2; ++r)
            for (int j = 0; j < n; ++j)
                for (int s = 0; s < 2; ++s) {
                    // (a^i b^r)(a^j b^s) = a^{i + j*(-1)^r} b^{r+s}
                    int k = r ? (i - j % n + 2 * n) % n : (i + j) % n;
                    mul[std::size_t(idx(i, r)) * m + idx(j, s)] = std::uint16_t(idx(k, r ^ s));
                }
    FiniteGroup G(m, std::move(mul), "D" + std::to_string(m));
    G.build_inverses();
    G.set_generators({{"a", idx(1 % n, 0)}, {"b", idx(0, 1)}});
    return G;
}

FiniteGroup FiniteGroup::dicyclic(int m) {
    if (m < 4 || m % 4 != 0) throw BadParameter("dicyclic(m) requires 4 | m");
    int n = m / 2; // order of a
    // elements: a^i (i<n), a^i b (n+i); b^2 = a^{n/2}, b a b^-1 = a^-1
    Table mul(std::size_t(m) * m);
    auto idx = [n](int i, int r) { return r ? n + i : i; };
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < 2; ++r)
            for (int j = 0; j < n; ++j)
                for (int s = 0; s < 2; ++s) {
                    // (a^i b^r)(a^j b^s) = a^{i + j*(-1)^r + [r&s]n/2} b^{r^s}
                    int k = r ? (i - j % n + 2 * n) % n : (i + j) % n;
                    if (r && s) k = (k + n / 2) % n;
                    mul[std::size_t(idx(i, r)) * m + idx(j, s)] = std::uint16_t(idx(k, r ^ s));
                }
    FiniteGroup G(m, std::move(mul), "Q" + std::to_string(m));
    G.build_inverses();
    G.set_generators({{"a", idx(1, 0)}, {"b", idx(0, 1)}});
    return G;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    long n = long(g.order()) * h.order();
    if (n > 65535) throw GroupTooLarge(int(std::min(n, 65535L)), 65535);
    int nh = h.order();
    Table mul(std::size_t(n) * n);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < nh; ++b)
            for (int c = 0; c < g.order(); ++c)
                for (int d = 0; d < nh; ++d)
                    mul[std::size_t(a * nh + b) * n + (c * nh + d)] =
                        std::uint16_t(g.op(a, c) * nh + h.op(b, d));
    FiniteGroup G(int(n), std::move(mul), g.label() + " x " + h.label());
    G.build_inverses();
    std::vector<std::pair<std::string, int>> gens;
    for (auto& [name, x] : g.generators()) gens.push_back({name, x * nh});
    for (auto& [name, x] : h.generators()) gens.push_back({name, x});
    // rename to a,b,c,... in order to keep names unique
    const char* names = "abcdefghijklmnop";
    for (std::size_t i = 0; i < gens.size() && i < 16; ++i)
        gens[i].first = std::string(1, names[i]);
    G.set_generators(std::move(gens));
    return G;
}

FiniteGroup FiniteGroup::semidirect_cyclic(int n, int m, int r) {
    if (n < 1 || m < 1) throw BadParameter("semidirect_cyclic requires n,m >= 1");
    r %= n;
    if (r < 0) r += n;
    // action must have order dividing m
    long rm = 1;
    for (int i = 0; i < m; ++i) rm = rm * r % n;
    if (rm != 1 % n) throw BadAction("r^m != 1 mod n");
    // elements a^i b^j -> i*m + j is awkward; use (i, j) -> i + n*j
    // (a^i b^j)(a^k b^l) = a^{i + k r^j} b^{j+l}
    std::vector<int> rpow(m);
    rpow[0] = 1 % n;
    for (int j = 1; j < m; ++j) rpow[j] = int(long(rpow[j - 1]) * r % n);
    long N = long(n) * m;
    if (N > 65535) throw GroupTooLarge(65535, 65535);
    Table mul(std::size_t(N) * N);
    auto idx = [n](int i, int j) { return i + n * j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < m; ++l)
                    mul[std::size_t(idx(i, j)) * N + idx(k, l)] =
                        std::uint16_t(idx(int((i + long(k) * rpow[j]) % n), (j + l) % m));
    FiniteGroup G(int(N), std::move(mul),
                  "sdp(" + std::to_string(n) + "," + std::to_string(m) + "," +
                      std::to_string(r) + ")");
    G.build_inverses();
    G.set_generators({{"a", idx(1 % n, 0)}, {"b", idx(0, 1 % m)}});
    return G;
}

int FiniteGroup::pow(int x, long e) const {
    int r = 0;
    int base = x;
    long k = e;
    if (k < 0) {
        base = inv_[x];
        k = -k;
    }
    while (k > 0) {
        if (k & 1) r = op(r, base);
        base = op(base, base);
        k >>= 1;
    }
    return r;
}

int FiniteGroup::order_of(int x) const {
    int y = x, o = 1;
    while (y != 0) {
        y = op(y, x);
        ++o;
    }
    return o;
}

std::optional<int> FiniteGroup::generator(const std::string& name) const {
    for (auto& [n, x] : gens_)
        if (n == name) return x;
    return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

} // namespace unitsep
