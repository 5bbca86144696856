#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppcan/module.hpp"

namespace ppcan {

/// Basis of Hom_G(M, N): dim M x dim N matrices f with action_M(g) f = f action_N(g).
std::vector<FqMatrix> hom_space(const Module& m, const Module& n);

struct Summand {
  Module module;
  FqMatrix basis;  // rows spanning the summand inside the decomposed module
};

struct DecompositionPart {
  Module module;
  int multiplicity = 0;
};

struct Decomposition {
  std::vector<DecompositionPart> parts;  // pairwise non-isomorphic, in order of first appearance
  std::vector<Summand> summands;
  std::vector<int> part_of;  // summand index -> part index

  int total_dim() const;
};

/// Krull-Schmidt decomposition into indecomposables. Splits by Fitting
/// decompositions of endomorphisms (a sweep over a basis of End(M), then
/// seeded random combinations); a piece is accepted as indecomposable once
/// every basis endomorphism is scalar plus nilpotent and those nilpotent parts
/// generate a nilpotent algebra.
std::vector<Summand> indecomposable_summands(const Module& m, std::uint64_t seed = 1);
Decomposition decompose(const Module& m, std::uint64_t seed = 1);
bool is_indecomposable(const Module& m, std::uint64_t seed = 1);

/// An invertible element of Hom_G(a, b) found by a basis sweep then seeded
/// random combinations. For indecomposable a and b the sweep alone is complete.
std::optional<FqMatrix> find_isomorphism(const Module& a, const Module& b, std::uint64_t seed = 1);
/// Exact test: falls back to comparing decompositions when the search fails.
bool is_isomorphic(const Module& a, const Module& b, std::uint64_t seed = 1);

/// Exact irreducibility test (Norton's criterion with a minimal-nullity
/// element a - lambda, every kernel vector spun in the module and in its transpose).
bool is_simple(const Module& m);

/// Whether the module is the identity on every generator.
bool has_trivial_action(const Module& m);

}  // namespace ppcan
