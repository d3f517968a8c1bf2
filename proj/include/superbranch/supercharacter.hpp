#pragma once

#include <vector>

#include "superbranch/coeff.hpp"
#include "superbranch/setpartition.hpp"

namespace superbranch {

/// χ^λ(u_μ) as a signed monomial. Throws DomainError if the ground sets differ.
QMonomial char_value(const SetPartition& lambda, const SetPartition& mu);

/// Same value computed as a product of single-arc characters. Only used to cross-check char_value.
QMonomial char_value_by_arcs(const SetPartition& lambda, const SetPartition& mu);

/// q^{dim λ} t^{|λ|}
QMonomial degree(const SetPartition& lambda);

/// ⟨χ^λ, χ^μ⟩ = δ_{λμ} t^{|λ|} q^{crs(λ,λ)}
QMonomial inner_product_formula(const SetPartition& lambda, const SetPartition& mu);

/// Superclass representative u_λ over F_q: identity plus ones at the arcs.
/// Row-major n×n, entries in {0,1}.
std::vector<int> superclass_matrix(const SetPartition& lambda);

} // namespace superbranch
