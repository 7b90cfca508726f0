// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ractor/polytope.hpp"
#include "ractor/racg.hpp"

namespace ractor {

/// Colour palette for the two-summand construction in F_2^4 + F_2^3.
namespace palette {
inline constexpr F2Vec alpha = F2Vec::unit(0);
inline constexpr F2Vec beta = F2Vec::unit(1);
inline constexpr F2Vec gamma = F2Vec::unit(2);
inline constexpr F2Vec delta = F2Vec::unit(3);
inline constexpr F2Vec alpha_p = F2Vec::unit(4);
inline constexpr F2Vec beta_p = F2Vec::unit(5);
inline constexpr F2Vec gamma_p = F2Vec::unit(6);
inline constexpr F2Vec delta_p = alpha_p + beta_p + gamma_p;
inline constexpr unsigned bits = 7;

inline constexpr F2Vec first_block{0b0001111};
inline constexpr F2Vec second_block{0b1110000};
/// Character summing the alpha, beta, gamma coordinates.
inline constexpr F2Vec wall_character{0b0000111};

inline constexpr F2Vec all[] = {alpha, beta, gamma, delta, alpha_p, beta_p, gamma_p, delta_p};

/// Four-colour palette in F_2^3 with the fourth colour the sum of the basis.
namespace generic {
inline constexpr F2Vec a = F2Vec::unit(0);
inline constexpr F2Vec b = F2Vec::unit(1);
inline constexpr F2Vec c = F2Vec::unit(2);
inline constexpr F2Vec d = a + b + c;
inline constexpr F2Vec all[] = {a, b, c, d};
}  // namespace generic
}  // namespace palette

/// Facet colouring by vectors of F_2^bits; defines the homomorphism on
/// the Coxeter group sending each reflection to its facet colour.
struct FacetColoring {
  unsigned bits = 0;
  std::vector<F2Vec> colors;

  VectorHom hom() const { return VectorHom{bits, colors}; }
  std::size_t image_rank() const { return f2_rank(colors); }
};

class ColoringError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Lexicographically first colouring with colour(f) = delta, the neighbours
/// of f from {alpha, beta, gamma}, colour(f') = delta', the neighbours of f'
/// from {alpha', beta', gamma'}, adjacent facets distinct and every vertex
/// independent. Throws ColoringError if the stars of f and f' do not
/// partition the facets or no such colouring exists.
FacetColoring search_admissible(const Polytope& p, FacetIndex f, FacetIndex f_opposite);

/// Proper colouring from the palette {a, b, c, a+b+c} of F_2^3.
FacetColoring four_colour(const Polytope& p);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Certificate {
  FacetIndex base = 0;
  FacetIndex opposite = 0;
  std::size_t image_rank = 0;
  std::vector<Check> checks;
  /// Product of the reflections in f' and three neighbours of f' coloured
  /// alpha', beta', gamma'; empty if none was found.
  Word nonorientable_witness;

  bool passed() const;
  const Check* find(const std::string& name) const;
};

Certificate certify(const Polytope& p, const FacetColoring& c, FacetIndex f, FacetIndex f_opposite);

/// Failures of "adjacent facets receive distinct colours", as facet pairs.
std::vector<std::pair<FacetIndex, FacetIndex>> proper_violations(const Polytope& p,
                                                                 const FacetColoring& c);
/// Vertices whose colours are linearly dependent.
std::vector<FacetSet> independence_violations(const Polytope& p, const FacetColoring& c);

}  // namespace ractor
