#include "hlgt/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hlgt {

std::string report_to_string(const ValidationReport& report) {
    std::ostringstream out;
    for (const auto& issue : report) {
        out << issue.axiom << " at (";
        for (size_t i = 0; i < issue.witness.size(); ++i) {
            if (i) out << ", ";
            out << issue.witness[i];
        }
        out << ")";
        if (!issue.detail.empty()) out << ": " << issue.detail;
        out << "\n";
    }
    return out.str();
}

FiniteGroup::FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul_table)
    : mul_table_(std::move(mul_table)) {
    const int n = order();
    if (n == 0) throw std::invalid_argument("group table is empty");
    for (const auto& row : mul_table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group table is not square");
        for (int v : row) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("group table entry out of range");
        }
    }
    inv_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mul_table_[a][b] == 0) {
                inv_[a] = b;
                break;
            }
        }
    }
}

int FiniteGroup::pow(int a, int k) const {
    int base = k >= 0 ? a : inv(a);
    long e = k >= 0 ? k : -static_cast<long>(k);
    int acc = 0;
    for (; e > 0; --e) acc = mul(acc, base);
    return acc;
}

bool FiniteGroup::is_abelian() const {
    const int n = order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

ValidationReport FiniteGroup::validate() const {
    ValidationReport report;
    const int n = order();
    for (int a = 0; a < n; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) {
            report.push_back({"identity", {a}, "0 is not a two-sided identity"});
        }
    }
    for (int a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < n; ++b) {
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                has_inverse = true;
                break;
            }
        }
        if (!has_inverse) report.push_back({"inverse", {a}, "no two-sided inverse"});
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    report.push_back({"associativity", {a, b, c}, ""});
                }
            }
        }
    }
    // Closure is enforced by the range check at construction; a row that is
    // not a permutation still betrays a broken table.
    for (int a = 0; a < n; ++a) {
        std::set<int> row(mul_table_[a].begin(), mul_table_[a].end());
        if (static_cast<int>(row.size()) != n) {
            report.push_back({"closure", {a}, "row is not a permutation"});
        }
    }
    return report;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(std::vector<std::vector<int>>{{0}}); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n <= 0) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n <= 0) throw std::invalid_argument("dihedral parameter must be positive");
    const int order = 2 * n;
    auto rot = [&](int g) { return g % n; };
    auto ref = [&](int g) { return g / n; };
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            // (r1, s1)*(r2, s2): reflections conjugate rotations to inverses
            int r = ref(a) == 0 ? (rot(a) + rot(b)) % n : (rot(a) - rot(b) + n) % n;
            int s = ref(a) ^ ref(b);
            t[a][b] = r + n * s;
        }
    }
    return FiniteGroup(std::move(t));
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty() || members_[0] != 0)
        throw std::invalid_argument("subgroup must contain the identity");
    for (int g : members_) {
        if (g < 0 || g >= parent.order())
            throw std::invalid_argument("subgroup member out of range");
        if (!std::binary_search(members_.begin(), members_.end(), parent.inv(g)))
            throw std::invalid_argument("subgroup not closed under inverse");
        for (int h : members_) {
            if (!std::binary_search(members_.begin(), members_.end(), parent.mul(g, h)))
                throw std::invalid_argument("subgroup not closed under multiplication");
        }
    }
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members_.begin(), members_.end(), g);
}

int Subgroup::index_of(int g) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), g);
    if (it == members_.end() || *it != g)
        throw std::out_of_range("element not in subgroup");
    return static_cast<int>(it - members_.begin());
}

bool Subgroup::is_normal() const {
    for (int g = 0; g < parent_->order(); ++g)
        for (int h : members_)
            if (!contains(parent_->conj(g, h))) return false;
    return true;
}

FiniteGroup Subgroup::as_group() const {
    const int n = size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = index_of(parent_->mul(members_[a], members_[b]));
    return FiniteGroup(std::move(t));
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    return centralizer(g, all);
}

Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& elems) {
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x) {
        bool commutes = true;
        for (int e : elems) {
            if (g.mul(x, e) != g.mul(e, x)) {
                commutes = false;
                break;
            }
        }
        if (commutes) members.push_back(x);
    }
    return Subgroup(g, std::move(members));
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    std::set<int> closure{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int gen : gens) {
            for (int y : {g.mul(x, gen), g.mul(x, g.inv(gen))}) {
                if (closure.insert(y).second) frontier.push_back(y);
            }
        }
    }
    return Subgroup(g, std::vector<int>(closure.begin(), closure.end()));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (&a.parent() != &b.parent() && !(a.parent() == b.parent()))
        throw std::invalid_argument("subgroup intersection needs a common parent");
    std::vector<int> members;
    for (int g : a.members())
        if (b.contains(g)) members.push_back(g);
    return Subgroup(a.parent(), std::move(members));
}

QuotientGroup::QuotientGroup(const FiniteGroup& parent, Subgroup normal)
    : parent_(&parent), normal_(std::move(normal)) {
    if (!normal_.is_normal())
        throw std::invalid_argument("quotient requires a normal subgroup");
    const int n = parent.order();
    projection_.assign(n, -1);
    // Ascending scan discovers each coset at its minimal element, so cosets
    // come out sorted by representative and the identity coset is index 0.
    for (int g = 0; g < n; ++g) {
        if (projection_[g] >= 0) continue;
        std::vector<int> coset;
        for (int h : normal_.members()) coset.push_back(parent.mul(g, h));
        std::sort(coset.begin(), coset.end());
        for (int x : coset) projection_[x] = static_cast<int>(cosets_.size());
        cosets_.push_back(std::move(coset));
    }

    const int m = order();
    mul_table_.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            int product = projection_[parent.mul(cosets_[a][0], cosets_[b][0])];
            // well-definedness: every representative pair must agree
            for (int x : cosets_[a]) {
                for (int y : cosets_[b]) {
                    if (projection_[parent.mul(x, y)] != product)
                        throw std::logic_error("quotient multiplication ill-defined");
                }
            }
            mul_table_[a][b] = product;
        }
    }
}

int element_order(const FiniteGroup& g, int a) {
    int k = 1;
    int x = a;
    while (x != 0) {
        x = g.mul(x, a);
        ++k;
    }
    return k;
}

std::vector<int> abelian_invariant_factors(const FiniteGroup& g) {
    if (!g.is_abelian()) throw std::invalid_argument("invariant factors require an abelian group");
    std::vector<int> factors;
    FiniteGroup cur = g;
    long expected = g.order();
    while (cur.order() > 1) {
        int best = 1, best_order = 1;
        for (int a = 1; a < cur.order(); ++a) {
            const int o = element_order(cur, a);
            if (o > best_order) {
                best_order = o;
                best = a;
            }
        }
        factors.push_back(best_order);
        // a maximal-order cyclic subgroup of a finite abelian group is a
        // direct summand, so quotienting it out peels one invariant factor
        cur = QuotientGroup(cur, generated_subgroup(cur, {best})).as_group();
    }
    long product = 1;
    for (int f : factors) product *= f;
    if (product != expected) throw std::logic_error("invariant factor product mismatch");
    return factors;
}

}  // namespace hlgt
