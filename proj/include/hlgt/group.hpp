#pragma once

#include <string>
#include <vector>

namespace hlgt {

// A single rule violation found by a validator.  `axiom` is a stable
// machine-readable name, `witness` the offending element tuple.
struct Issue {
    std::string axiom;
    std::vector<int> witness;
    std::string detail;
};

using ValidationReport = std::vector<Issue>;

std::string report_to_string(const ValidationReport& report);

// Finite group given by an explicit Cayley table.  Elements are indices
// 0..order-1 and the identity is always index 0.  Construction checks only
// table shape; call validate() for the group axioms.
class FiniteGroup {
public:
    FiniteGroup();  // trivial group {0}
    explicit FiniteGroup(std::vector<std::vector<int>> mul_table);

    int order() const { return static_cast<int>(mul_table_.size()); }
    int identity() const { return 0; }
    int mul(int a, int b) const { return mul_table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int pow(int a, int k) const;
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    bool is_abelian() const;

    // Group-axiom check: closure, identity, associativity, inverse.
    ValidationReport validate() const;

    const std::vector<std::vector<int>>& table() const { return mul_table_; }

    bool operator==(const FiniteGroup& other) const { return mul_table_ == other.mul_table_; }

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    // Dihedral group of order 2n; element (r, s) with rotation r in [0,n) and
    // reflection bit s is the index r + n*s.
    static FiniteGroup dihedral(int n);

private:
    std::vector<std::vector<int>> mul_table_;
    std::vector<int> inv_;  // left inverses, 0 where none exists
};

// Subset of a parent group's elements, kept sorted.  Construction verifies
// closure under multiplication and inverse and membership of the identity.
class Subgroup {
public:
    Subgroup(const FiniteGroup& parent, std::vector<int> members);

    const FiniteGroup& parent() const { return *parent_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int g) const;
    // Position of g in members(); throws if absent.
    int index_of(int g) const;
    bool is_normal() const;

    // The subgroup as a standalone group on indices into members(); the
    // identity lands at index 0 because members are sorted.
    FiniteGroup as_group() const;

private:
    const FiniteGroup* parent_;
    std::vector<int> members_;
};

Subgroup center(const FiniteGroup& g);
// Largest subgroup commuting with every element of `elems`.
Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& elems);
// Subgroup generated by `gens` (closure).
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Order of a single element.
int element_order(const FiniteGroup& g, int a);

// Invariant factors of a finite abelian group, largest first, each divisible
// by the next; empty for the trivial group.  Peels off a maximal-order cyclic
// direct summand and recurses on the quotient.  Throws on non-abelian input.
std::vector<int> abelian_invariant_factors(const FiniteGroup& g);

// Quotient of a parent group by a normal subgroup.  Cosets are sorted by
// their minimal element, so the identity coset is index 0.
class QuotientGroup {
public:
    QuotientGroup(const FiniteGroup& parent, Subgroup normal);

    const FiniteGroup& parent() const { return *parent_; }
    const Subgroup& normal() const { return normal_; }
    int order() const { return static_cast<int>(cosets_.size()); }
    const std::vector<std::vector<int>>& cosets() const { return cosets_; }
    // coset index of a parent element
    int project(int g) const { return projection_[g]; }
    // minimal-element representative of a coset
    int representative(int coset) const { return cosets_[coset][0]; }
    int mul(int a, int b) const { return mul_table_[a][b]; }

    FiniteGroup as_group() const { return FiniteGroup(mul_table_); }

private:
    const FiniteGroup* parent_;
    Subgroup normal_;
    std::vector<std::vector<int>> cosets_;
    std::vector<int> projection_;
    std::vector<std::vector<int>> mul_table_;
};

}  // namespace hlgt
