// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ractor/chambers.hpp"
#include "ractor/racg.hpp"
#include "ractor/zsmith.hpp"

namespace ractor {

class DisconnectedCover : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The p-fold cyclic cover of the chamber complex determined by the crossing
/// count of a co-oriented wall mod p, as a right action of the Coxeter group
/// on chambers x Z/p. Point (q, k) has index q * p + k; the basepoint is 0.
class CoverAction {
 public:
  /// Throws DisconnectedCover if the action is not transitive.
  CoverAction(const ChamberComplex& cx, const CoorientedWall& wall, std::size_t sheets);

  std::size_t sheets() const { return sheets_; }
  std::size_t point_count() const { return point_count_; }
  std::size_t generator_count() const { return perms_.size(); }
  std::size_t chamber_count() const { return point_count_ / sheets_; }
  std::size_t basepoint() const { return 0; }

  std::size_t point(std::size_t chamber, std::size_t level) const { return chamber * sheets_ + level; }
  std::size_t chamber_of(std::size_t x) const { return x / sheets_; }
  std::size_t level_of(std::size_t x) const { return x % sheets_; }

  std::size_t act(std::size_t x, Generator g) const { return perms_[g][x]; }
  std::size_t act(std::size_t x, const Word& w) const;
  const std::vector<std::uint32_t>& permutation(Generator g) const { return perms_.at(g); }

  bool generators_are_involutions() const;
  std::size_t orbit_size(std::size_t x) const;

 private:
  std::size_t sheets_;
  std::size_t point_count_;
  std::vector<std::vector<std::uint32_t>> perms_;
};

CoverAction cover_action(const ChamberComplex& cx, const CoorientedWall& wall, std::size_t p);

struct SignedLetter {
  Generator generator;
  int exponent;  // +1 or -1
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};
using SignedWord = std::vector<SignedLetter>;

/// Breadth-first Schreier transversal of a transitive action and its Schreier
/// generators s(x, g) = t_x g t_{x.g}^-1. Generators absorbed by the
/// transversal (tree edges) are trivial and get no column.
class SchreierData {
 public:
  explicit SchreierData(const CoverAction& a);

  std::size_t index() const { return parent_.size(); }
  Word transversal_word(std::size_t x) const;
  /// Column of s(x, g) in the relator matrix, or -1 if it is trivial.
  std::int64_t column(std::size_t x, Generator g) const { return column_[x * generators_ + g]; }
  std::size_t column_count() const { return columns_.size(); }
  /// (point, generator) of a column.
  std::pair<std::size_t, Generator> column_source(std::size_t col) const { return columns_.at(col); }
  SignedWord schreier_word(std::size_t x, Generator g) const;

 private:
  std::size_t generators_;
  std::vector<std::int64_t> parent_;
  std::vector<Generator> parent_generator_;
  std::vector<std::int64_t> column_;
  std::vector<std::uint32_t> image_;
  std::vector<std::pair<std::size_t, Generator>> columns_;
};

SchreierData schreier(const CoverAction& a);

/// Rows: for each point x (in index order) and each relator R, the exponent
/// sums over Schreier generators of the rewrite of t_x R t_x^-1. Columns:
/// non-trivial Schreier generators. Its cokernel is the abelianised point
/// stabiliser.
zsmith::SparseIntMatrix abelianized_relator_matrix(const CoverAction& a, const SchreierData& d,
                                                   const RacgPresentation& pres);

/// Homology of the cover computed from its quotient cell complex.
struct CellularHomology {
  std::vector<std::size_t> cells;  // by dimension 0..3
  long euler_characteristic = 0;
  zsmith::TorsionProfile h1;
};

/// First homology of the cover from the cells of the tiling modulo the point
/// stabiliser. Requires a 3-dimensional polytope and a free action on cells.
CellularHomology homology_via_cells(const CoverAction& a, const ChamberComplex& cx,
                                    const zsmith::SnfOptions& options = {});

}  // namespace ractor
