#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcat/core.hpp"

namespace rcat {

/// A finite category presented by a total composition table. Arrows are
/// globally indexed with explicit source/target; identities are listed per
/// object. With this presentation every axiom is exhaustively checkable.
struct FiniteCategory {
    int n_objects = 0;
    std::vector<int> arrow_src;
    std::vector<int> arrow_tgt;
    std::vector<int> identity;               // object -> arrow index
    std::vector<std::vector<int>> comp;      // comp[g][f] = g∘f, -1 if not composable

    int n_arrows() const { return static_cast<int>(arrow_src.size()); }
    bool composable(int g, int f) const { return arrow_tgt[f] == arrow_src[g]; }
    int compose(int g, int f) const;
    bool is_identity(int a) const;
    /// Arrow indices in hom(i, j).
    std::vector<int> hom(int i, int j) const;
};

ValidationReport validate_category(const FiniteCategory& c);

FiniteCategory opposite(const FiniteCategory& c);

/// Objects and arrows are pairs, flattened as a*n2+b; composition componentwise.
FiniteCategory product_category(const FiniteCategory& c, const FiniteCategory& d);

/// One-object category with only the identity.
FiniteCategory terminal_category();

/// Reedy structure: degree function plus the degree-raising subcategory I⁺ and
/// degree-lowering subcategory I⁻, with unique minus-then-plus factorization.
struct ReedyStructure {
    FiniteCategory base;
    std::vector<int> degree;          // per object, non-negative
    std::vector<int> plus_arrows;     // sorted, non-identity arrow indices
    std::vector<int> minus_arrows;

    bool in_plus(int a) const;
    bool in_minus(int a) const;
};

ValidationReport validate_reedy(const ReedyStructure& r);

bool is_direct(const ReedyStructure& r);

/// Opposite Reedy structure: same degrees, plus and minus roles swapped.
ReedyStructure opposite(const ReedyStructure& r);

struct ReedyFactorization {
    int minus_part;  // arrow in I⁻ ∪ identities
    int plus_part;   // arrow in I⁺ ∪ identities
};

/// All pairs (f⁻, f⁺) with f = f⁺∘f⁻; a valid Reedy structure has exactly one.
std::vector<ReedyFactorization> reedy_factorizations(const ReedyStructure& r, int arrow);

std::vector<std::string> builtin_names();
ReedyStructure builtin_reedy(const std::string& name);

}  // namespace rcat
