#include "unitsep/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace unitsep {

int Presentation::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == name) return int(i);
    return -1;
}

namespace {

// splits a word token like "c^2" or "a^-1" into letters
void append_token(const Presentation& p, const std::string& tok, std::vector<int>& out) {
    if (tok == "1") return;
    std::string name = tok;
    long e = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
        name = tok.substr(0, caret);
        e = std::stol(tok.substr(caret + 1));
    }
    int g = p.gen_index(name);
    if (g < 0) throw BadParameter("unknown generator '" + name + "' in word");
    int letter = e >= 0 ? g + 1 : -(g + 1);
    for (long i = 0; i < std::labs(e); ++i) out.push_back(letter);
}

} // namespace

std::vector<int> parse_word(const Presentation& p, const std::string& text) {
    std::vector<int> out;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) append_token(p, tok, out);
    return out;
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream lines(text);
    std::string line;
    bool have_gens = false;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string first;
        if (!(probe >> first)) continue;
        if (first == "gens:") {
            std::string g;
            while (probe >> g) p.gens.push_back(g);
            have_gens = true;
            continue;
        }
        if (!have_gens) throw BadParameter("presentation file must start with a 'gens:' line");
        auto eq = line.find('=');
        std::vector<int> rel;
        if (eq == std::string::npos) {
            rel = parse_word(p, line); // bare relator
        } else {
            auto lhs = parse_word(p, line.substr(0, eq));
            auto rhs = parse_word(p, line.substr(eq + 1));
            rel = lhs;
            for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) rel.push_back(-*it);
        }
        if (!rel.empty()) p.relators.push_back(std::move(rel));
    }
    if (p.gens.empty()) throw EmptyPresentation();
    return p;
}

namespace {

struct Enumerator {
    int ngens;
    std::vector<std::vector<int>> rels; // relators as column sequences
    // coset table, 1-based cosets; column 2g = generator g, 2g+1 = inverse
    std::vector<std::vector<int>> tab;
    std::vector<int> parent; // union-find over cosets
    int defined = 1;
    int cap;

    explicit Enumerator(const Presentation& p, int max_cosets) : cap(max_cosets) {
        ngens = int(p.gens.size());
        if (ngens == 0) throw EmptyPresentation();
        if (cap < 1) throw BadParameter("max_cosets must be >= 1");
        for (auto& r : p.relators) {
            std::vector<int> cols;
            for (int letter : r) cols.push_back(col(letter));
            rels.push_back(std::move(cols));
        }
        tab.assign(2, std::vector<int>(2 * ngens, 0)); // index 0 unused
        parent.assign(2, 0);
        parent[1] = 1;
    }

    static int invcol(int c) { return c ^ 1; }
    int col(int letter) const { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

    int rep(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }

    int define(int from, int c) {
        if (defined >= cap) throw CosetOverflow(cap);
        ++defined;
        tab.push_back(std::vector<int>(2 * ngens, 0));
        parent.push_back(int(tab.size()) - 1);
        int nu = int(tab.size()) - 1;
        tab[from][c] = nu;
        tab[nu][invcol(c)] = from;
        return nu;
    }

    void merge(int a, int b, std::deque<int>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        queue.push_back(b);
    }

    int merges = 0;

    void coincidence(int a, int b) {
        std::deque<int> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            int dead = queue.front();
            queue.pop_front();
            ++merges;
            for (int c = 0; c < 2 * ngens; ++c) {
                int delta = tab[dead][c];
                if (!delta) continue;
                tab[dead][c] = 0;
                tab[delta][invcol(c)] = 0;
                int mu = rep(dead), nu = rep(delta);
                if (tab[mu][c]) {
                    merge(nu, tab[mu][c], queue);
                } else if (tab[nu][invcol(c)]) {
                    merge(mu, tab[nu][invcol(c)], queue);
                } else {
                    tab[mu][c] = nu;
                    tab[nu][invcol(c)] = mu;
                }
            }
        }
    }

    bool live(int a) { return rep(a) == a; }

    void scan_and_fill(int alpha, const std::vector<int>& w) {
        if (w.empty()) return;
        int i = 0, j = int(w.size()) - 1;
        int f = alpha, b = alpha;
        while (true) {
            while (i <= j && tab[f][w[i]]) f = rep(tab[f][w[i]]), ++i;
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && tab[b][invcol(w[j])]) b = rep(tab[b][invcol(w[j])]), --j;
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (j == i) {
                tab[f][w[i]] = b;
                tab[b][invcol(w[i])] = f;
                return;
            }
            define(f, w[i]);
        }
    }

    void run() {
        // process cosets in creation order; repeat until a full pass makes
        // no change (coincidences can dirty rows scanned earlier)
        while (true) {
            int before = defined + merges;
            for (int alpha = 1; alpha < int(tab.size()); ++alpha) {
                if (!live(alpha)) continue;
                for (auto& w : rels) {
                    if (!live(alpha)) break;
                    scan_and_fill(alpha, w);
                }
                if (!live(alpha)) continue;
                for (int c = 0; c < 2 * ngens; ++c)
                    if (!tab[alpha][c]) define(alpha, c);
            }
            if (defined + merges == before) break;
        }
    }
};

} // namespace

FiniteGroup todd_coxeter(const Presentation& p, int max_cosets) {
    Enumerator e(p, max_cosets);
    e.run();
    // compress live cosets
    std::vector<int> id(e.tab.size(), -1);
    std::vector<int> live;
    for (int a = 1; a < int(e.tab.size()); ++a)
        if (e.rep(a) == a) {
            id[a] = int(live.size());
            live.push_back(a);
        }
    int n = int(live.size());
    // representative word (as column path from coset 1) per live coset
    std::vector<std::vector<int>> word(n);
    std::vector<char> seen(n, 0);
    std::deque<int> bfs{id[e.rep(1)]};
    seen[id[e.rep(1)]] = 1;
    while (!bfs.empty()) {
        int c = bfs.front();
        bfs.pop_front();
        for (int col = 0; col < 2 * e.ngens; ++col) {
            int d = e.tab[live[c]][col];
            if (!d) continue;
            int dd = id[e.rep(d)];
            if (!seen[dd]) {
                seen[dd] = 1;
                word[dd] = word[c];
                word[dd].push_back(col);
                bfs.push_back(dd);
            }
        }
    }
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int c = live[i];
            for (int col : word[j]) c = e.rep(e.tab[c][col]);
            table[i][j] = id[e.rep(c)];
        }
    FiniteGroup G = FiniteGroup::from_cayley(table, "<presented>");
    // identity coset is index id[rep(1)], which from_cayley relabels to 0;
    // generator g is the coset 1*g
    std::vector<std::pair<std::string, int>> gens;
    int e0 = id[e.rep(1)];
    auto relabel = [&](int x) {
        if (x == e0) return 0;
        if (x == 0) return e0;
        return x;
    };
    for (int g = 0; g < e.ngens; ++g) {
        int img = e.tab[e.rep(1)][2 * g];
        gens.push_back({p.gens[g], relabel(id[e.rep(img)])});
    }
    G.set_generators(std::move(gens));
    return G;
}

} // namespace unitsep
