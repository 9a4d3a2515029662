#include <algorithm>

#include "unitsep/group.hpp"

namespace unitsep {

namespace {

struct Fingerprint {
    std::vector<int> order_census;          // count of elements per order
    std::vector<std::pair<int, int>> shape; // sorted (class size, rep order)
    int center_order, derived_order;

    bool operator==(const Fingerprint& o) const {
        return order_census == o.order_census && shape == o.shape &&
               center_order == o.center_order && derived_order == o.derived_order;
    }
};

Fingerprint fingerprint(const FiniteGroup& G) {
    Fingerprint f;
    f.order_census.assign(G.order() + 1, 0);
    for (int x = 0; x < G.order(); ++x) ++f.order_census[G.order_of(x)];
    auto cc = conjugacy_classes(G);
    for (std::size_t i = 0; i < cc.members.size(); ++i)
        f.shape.push_back({int(cc.members[i].size()), G.order_of(cc.reps[i])});
    std::sort(f.shape.begin(), f.shape.end());
    f.center_order = center(G).order();
    f.derived_order = derived_subgroup(G).order();
    return f;
}

// greedy generating sequence; high-order elements first for better pruning
std::vector<int> generating_sequence(const FiniteGroup& G) {
    std::vector<int> gens;
    Subgroup S = trivial_subgroup(G);
    std::vector<int> by_order(G.order());
    for (int i = 0; i < G.order(); ++i) by_order[i] = i;
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](int a, int b) { return G.order_of(a) > G.order_of(b); });
    while (S.order() < G.order()) {
        for (int x : by_order)
            if (!S.contains(x)) {
                gens.push_back(x);
                S = generated_subgroup(G, gens);
                break;
            }
    }
    return gens;
}

struct IsoSearch {
    const FiniteGroup& G;
    const FiniteGroup& H;
    std::vector<int> gens;
    std::vector<int> gclass_size, hclass_size;
    std::vector<int> map;    // partial map G -> H, -1 unset
    std::vector<int> used;   // image -> 1 if taken
    std::vector<int> domain; // mapped elements in assignment order

    IsoSearch(const FiniteGroup& g, const FiniteGroup& h) : G(g), H(h) {
        gens = generating_sequence(G);
        auto cg = conjugacy_classes(G);
        auto ch = conjugacy_classes(H);
        gclass_size.resize(G.order());
        hclass_size.resize(H.order());
        for (int x = 0; x < G.order(); ++x)
            gclass_size[x] = int(cg.members[cg.class_of[x]].size());
        for (int x = 0; x < H.order(); ++x)
            hclass_size[x] = int(ch.members[ch.class_of[x]].size());
        map.assign(G.order(), -1);
        used.assign(H.order(), 0);
        map[0] = 0;
        used[0] = 1;
        domain.push_back(0);
    }

    bool assign(int x, int y, std::vector<std::pair<int, int>>& undo) {
        if (map[x] >= 0) return map[x] == y;
        if (used[y]) return false;
        map[x] = y;
        used[y] = 1;
        undo.push_back({x, y});
        domain.push_back(x);
        return true;
    }

    // close the partial map under products; false on inconsistency
    bool close(std::vector<std::pair<int, int>>& undo) {
        for (std::size_t i = 0; i < domain.size(); ++i) {
            int a = domain[i];
            for (std::size_t j = 0; j < domain.size(); ++j) {
                int b = domain[j];
                if (!assign(G.op(a, b), H.op(map[a], map[b]), undo)) return false;
            }
        }
        return true;
    }

    void rollback(const std::vector<std::pair<int, int>>& undo, std::size_t dom0) {
        for (auto& [x, y] : undo) {
            map[x] = -1;
            used[y] = 0;
        }
        domain.resize(dom0);
    }

    bool extend(std::size_t gi) {
        if (gi == gens.size()) return true;
        int g = gens[gi];
        int og = G.order_of(g);
        for (int h = 0; h < H.order(); ++h) {
            if (used[h] || H.order_of(h) != og || hclass_size[h] != gclass_size[g]) continue;
            std::vector<std::pair<int, int>> undo;
            std::size_t dom0 = domain.size();
            if (assign(g, h, undo) && close(undo) && extend(gi + 1)) return true;
            rollback(undo, dom0);
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> is_isomorphic(const FiniteGroup& G, const FiniteGroup& H) {
    if (G.order() != H.order()) return std::nullopt;
    if (G.order() == 1) return std::vector<int>{0};
    if (!(fingerprint(G) == fingerprint(H))) return std::nullopt;
    IsoSearch s(G, H);
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

bool verify_isomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& f) {
    if (int(f.size()) != G.order() || G.order() != H.order()) return false;
    std::vector<char> hit(H.order(), 0);
    for (int x = 0; x < G.order(); ++x) {
        if (f[x] < 0 || f[x] >= H.order() || hit[f[x]]) return false;
        hit[f[x]] = 1;
    }
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (f[G.op(a, b)] != H.op(f[a], f[b])) return false;
    return true;
}

} // namespace unitsep
