#pragma once

#include <cstdint>

#include "homtwist/dg_functor.hpp"

namespace homtwist {

/// Two objects; hom(0,1) spanned by u (closed, degree 0), v (degree -1),
/// w (degree 0) with dv = w; no nontrivial compositions. H(hom(0,1)) = k[u].
CategoryPtr collapseFixture(const Field& f);

/// The functor collapseFixture -> interval(1) sending u to the generator and
/// killing the acyclic summand (v, w).
DgFunctor collapseFunctor(CategoryPtr fixture, CategoryPtr interval1);

/// Seeded directed dg category on a free acyclic quiver: basis = paths,
/// composition = concatenation, differential induced from edge differentials
/// (combinations of closed parallel paths), so all axioms hold by
/// construction. Guarantees at least two degrees and a nonzero differential.
CategoryPtr randomDirectedDg(std::uint64_t seed, const Field& f);

}  // namespace homtwist
