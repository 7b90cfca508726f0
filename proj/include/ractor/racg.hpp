// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ractor/polytope.hpp"

namespace ractor {

/// Vector in F_2^m, m <= 64. Coordinate i is bit i.
struct F2Vec {
  std::uint64_t bits = 0;

  constexpr F2Vec() = default;
  constexpr explicit F2Vec(std::uint64_t b) : bits(b) {}
  static constexpr F2Vec unit(unsigned i) { return F2Vec(std::uint64_t{1} << i); }

  constexpr bool coord(unsigned i) const { return (bits >> i) & 1u; }
  constexpr bool is_zero() const { return bits == 0; }
  constexpr int weight() const { return std::popcount(bits); }
  /// Restriction to the coordinates in mask (the projection onto a block).
  constexpr F2Vec project(F2Vec mask) const { return F2Vec(bits & mask.bits); }
  /// Dot product with a mask, i.e. the character "sum of the masked coordinates".
  constexpr bool dot(F2Vec mask) const { return std::popcount(bits & mask.bits) & 1; }

  friend constexpr F2Vec operator+(F2Vec a, F2Vec b) { return F2Vec(a.bits ^ b.bits); }
  F2Vec& operator+=(F2Vec o) {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr bool operator==(F2Vec, F2Vec) = default;
  friend constexpr auto operator<=>(F2Vec, F2Vec) = default;

  /// Character i of the string is coordinate i.
  std::string to_string(unsigned width) const;
  static F2Vec parse(const std::string& s);
};

/// Rank over F_2 of a family of vectors.
std::size_t f2_rank(std::span<const F2Vec> vectors);

using Generator = std::size_t;
/// Word in the reflection generators. Stored unreduced.
using Word = std::vector<Generator>;

Word concat(const Word& a, const Word& b);

/// Generators one per facet; relators gg per facet and ghgh per adjacent pair.
struct RacgPresentation {
  std::size_t generator_count = 0;
  std::vector<Word> relators;
};

RacgPresentation presentation(const Polytope& p);

/// Homomorphism to F_2^bits given by generator images.
struct VectorHom {
  unsigned bits = 0;
  std::vector<F2Vec> images;

  F2Vec eval(const Word& w) const;
  /// The composite with the character "sum of coordinates in mask".
  VectorHom character(F2Vec mask) const;
};

/// Endomorphism keeping the generators in the closed star of a facet and
/// sending the others to the identity.
class Retraction {
 public:
  Retraction(const Polytope& p, FacetIndex base);

  FacetIndex base() const { return base_; }
  bool keeps(Generator g) const { return keep_.at(g); }
  Word apply(const Word& w) const;

 private:
  FacetIndex base_;
  std::vector<bool> keep_;
};

Retraction retraction(const Polytope& p, FacetIndex f);

/// True iff project(phi(g), block) == phi(r(g)) for every generator g.
bool check_retraction_compat(const VectorHom& phi, const Retraction& r, F2Vec block);

}  // namespace ractor
