#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitsep/errors.hpp"

namespace unitsep {

// Fixed-size bit set over the elements of one group.
struct Bitset {
    int n = 0;
    std::vector<std::uint64_t> w;

    Bitset() = default;
    explicit Bitset(int n_) : n(n_), w((n_ + 63) / 64, 0) {}

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    int count() const;
    bool subset_of(const Bitset& o) const;
    bool operator==(const Bitset& o) const { return n == o.n && w == o.w; }
    bool operator<(const Bitset& o) const { return w < o.w; }
    std::size_t hash() const;
    std::vector<int> elements() const;
};

// A finite group materialized as a Cayley table. Element 0 is the identity.
// Immutable after construction; all operations on it are pure.
class FiniteGroup {
  public:
    using Table = std::vector<std::uint16_t>;

    // Validates associativity, identity and inverses; throws typed errors.
    static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table,
                                   const std::string& label);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    // dihedral group of order m (m even, >= 2)
    static FiniteGroup dihedral(int m);
    // dicyclic (generalized quaternion) group of order m (4 | m):
    // <a,b | a^{m/2}=1, b^2=a^{m/4}, a^b=a^{-1}>
    static FiniteGroup dicyclic(int m);
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
    // C_n x| C_m with generator action a -> a^r; requires r^m = 1 mod n
    static FiniteGroup semidirect_cyclic(int n, int m, int r);
    // (G x H)/<(zg, zh)> for central involutions zg, zh
    static FiniteGroup central_product(const FiniteGroup& g, int zg, const FiniteGroup& h,
                                       int zh);

    int order() const { return n_; }
    int op(int a, int b) const { return mul_[std::size_t(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return 0; }
    int conj(int x, int g) const { return op(op(inv_[g], x), g); } // g^-1 x g
    int comm(int x, int y) const {                                 // (x,y) = x^-1 y^-1 x y
        return op(op(op(inv_[x], inv_[y]), x), y);
    }
    int pow(int x, long e) const;
    int order_of(int x) const;

    const std::string& label() const { return label_; }
    void set_label(const std::string& l) { label_ = l; }

    // Named generators (used by the quotient-by-word spec syntax).
    const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }
    void set_generators(std::vector<std::pair<std::string, int>> g) { gens_ = std::move(g); }
    std::optional<int> generator(const std::string& name) const;

    bool is_abelian() const;

  private:
    FiniteGroup(int n, Table mul, std::string label);
    void build_inverses(); // throws NoIdentity / NoInverse
    void validate_associativity() const;

    int n_ = 1;
    Table mul_;
    Table inv_;
    std::string label_;
    std::vector<std::pair<std::string, int>> gens_;
};

// A subgroup of a fixed parent group, stored as a bit set of element indices.
struct Subgroup {
    const FiniteGroup* G = nullptr;
    Bitset members;

    Subgroup() = default;
    Subgroup(const FiniteGroup& g, Bitset m) : G(&g), members(std::move(m)) {}

    int order() const { return members.count(); }
    bool contains(int x) const { return members.test(x); }
    std::vector<int> elements() const { return members.elements(); }
    bool operator==(const Subgroup& o) const { return G == o.G && members == o.members; }
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);
// smallest subgroup containing the given elements
Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup conjugate_subgroup(const Subgroup& s, int g);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& s);
Subgroup centralizer(const FiniteGroup& G, const Subgroup& s);
bool is_normal(const FiniteGroup& G, const Subgroup& s);
bool normalizes(const Subgroup& outer, const Subgroup& inner); // every g in outer
bool is_subgroup_closed(const Subgroup& s); // closure + identity + inverses + Lagrange

Subgroup center(const FiniteGroup& G);
Subgroup derived_subgroup(const FiniteGroup& G);
// normal closure of the subgroup generated by the given elements
Subgroup normal_closure(const FiniteGroup& G, const std::vector<int>& gens);

struct ConjugacyClasses {
    std::vector<int> class_of;              // element -> class id
    std::vector<std::vector<int>> members;  // class id -> sorted elements
    std::vector<int> reps;                  // class id -> smallest element
};
ConjugacyClasses conjugacy_classes(const FiniteGroup& G);

// Conjugacy classes merged under x ~ x^t for all t coprime to the order of x.
struct CyclotomicClasses {
    std::vector<int> cyclo_of_class; // conjugacy class id -> cyclotomic class id
    int count = 0;
};
CyclotomicClasses cyclotomic_classes(const FiniteGroup& G, const ConjugacyClasses& cc);
int cyclotomic_class_count(const FiniteGroup& G);

int exponent(const FiniteGroup& G);
// invariant factors d1 | d2 | ... of G/G'
std::vector<long> abelian_invariants(const FiniteGroup& G);

struct Quotient {
    FiniteGroup group;
    std::vector<int> proj; // parent element -> coset index
};
Quotient quotient(const FiniteGroup& G, const Subgroup& N); // throws NotNormal

// Full subgroup lattice (complete for solvable groups; every group this
// library can decompose is solvable, see shoda.hpp).
struct SubgroupLattice {
    std::vector<Subgroup> all;           // deduplicated, sorted by (order, members)
    std::vector<int> conj_rep;           // index into `all` of the class representative
    std::vector<int> class_reps;         // indices of representatives, sorted
};
SubgroupLattice subgroups(const FiniteGroup& G, int cap = 256); // throws GroupTooLarge
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G, int cap = 256);

// Isomorphism testing by generator-image backtracking with fingerprint
// pruning. Returns a witness map G -> H when isomorphic.
std::optional<std::vector<int>> is_isomorphic(const FiniteGroup& G, const FiniteGroup& H);
bool verify_isomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& f);

} // namespace unitsep
