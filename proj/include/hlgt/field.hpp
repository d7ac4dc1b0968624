#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

#include "hlgt/complex.hpp"
#include "hlgt/crossed_module.hpp"

namespace hlgt {

// Raised when an enumeration or a dense solve would exceed its configured
// cap; the CLI maps it to its own exit code.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultEnumerationCap = 1000000;

// Field configuration: one E element per edge, one Phi element per face.
struct Configuration {
    std::vector<int> eps;
    std::vector<int> phi;

    auto operator<=>(const Configuration&) const = default;
};

// eps reduced modulo im(delta): one coker coset index per edge.
using ReducedGaugeField = std::vector<int>;

// Transport along a path: product of the per-step values in written order,
// eps_gamma = eps_{e_n} ... eps_{e_1}.
int holonomy1(const FiniteGroup& e_group, const CellComplex& x,
              const std::vector<int>& eps, const PathWord& w);

// Surface transport over a sphere word: the written-order product of
// whisker-conjugated face values, eps_whisker |> phi_f^sign.
int holonomy2(const CrossedModule& cm, const CellComplex& x,
              const Configuration& cfg, const SphereWord& w);

// delta(phi_f) = eps_{boundary of f} on every face.
bool is_fake_flat(const CrossedModule& cm, const CellComplex& x, const Configuration& cfg);

// phi_{boundary of q} trivial on every ball (vacuously true without balls).
bool is_flat_phi(const CrossedModule& cm, const CellComplex& x, const Configuration& cfg);

ReducedGaugeField reduce(const CrossedModule& cm, const Configuration& cfg);
ReducedGaugeField reduce(const QuotientGroup& coker, const std::vector<int>& eps);

// Coker-level transport and flatness of a reduced field.
int holonomy1_reduced(const QuotientGroup& coker, const CellComplex& x,
                      const ReducedGaugeField& eps_bar, const PathWord& w);
bool is_flat_reduced(const QuotientGroup& coker, const CellComplex& x,
                     const ReducedGaugeField& eps_bar);

// All fake-flat configurations in lexicographic (eps, phi) order.  Face
// constraints prune the edge recursion as soon as a boundary is fully
// assigned.  Throws CapExceeded beyond `cap` results.
std::vector<Configuration> enumerate_fake_flat(const CrossedModule& cm, const CellComplex& x,
                                               long cap = kDefaultEnumerationCap);

}  // namespace hlgt
