// SPDX-License-Identifier: Apache-2.0
#include "ractor/racg.hpp"

#include <stdexcept>

namespace ractor {

std::string F2Vec::to_string(unsigned width) const {
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i)
    if (coord(i)) s[i] = '1';
  return s;
}

F2Vec F2Vec::parse(const std::string& s) {
  if (s.empty() || s.size() > 64) throw InputError("bit string must have 1..64 characters");
  F2Vec v;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.bits |= std::uint64_t{1} << i;
    else if (s[i] != '0')
      throw InputError("bit string '" + s + "' contains a character other than 0/1");
  }
  return v;
}

std::size_t f2_rank(std::span<const F2Vec> vectors) {
  std::uint64_t basis[64] = {};  // basis[b] has leading bit b
  std::size_t rank = 0;
  for (F2Vec v : vectors) {
    std::uint64_t x = v.bits;
    for (int b = 63; b >= 0 && x; --b) {
      if (!((x >> b) & 1u)) continue;
      if (!basis[b]) {
        basis[b] = x;
        ++rank;
        break;
      }
      x ^= basis[b];
    }
  }
  return rank;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

RacgPresentation presentation(const Polytope& p) {
  RacgPresentation pres;
  pres.generator_count = p.facet_count();
  for (FacetIndex f = 0; f < p.facet_count(); ++f) pres.relators.push_back({f, f});
  for (auto [a, b] : p.edges()) pres.relators.push_back({a, b, a, b});
  return pres;
}

F2Vec VectorHom::eval(const Word& w) const {
  F2Vec acc;
  for (Generator g : w) {
    if (g >= images.size()) throw std::out_of_range("word letter is not a generator");
    acc += images[g];
  }
  return acc;
}

VectorHom VectorHom::character(F2Vec mask) const {
  VectorHom chi{1, {}};
  chi.images.reserve(images.size());
  for (F2Vec v : images) chi.images.push_back(F2Vec(v.dot(mask) ? 1 : 0));
  return chi;
}

Retraction::Retraction(const Polytope& p, FacetIndex base)
    : base_(base), keep_(p.facet_count(), false) {
  for (FacetIndex g : p.closed_star(base)) keep_[g] = true;
}

Word Retraction::apply(const Word& w) const {
  Word out;
  for (Generator g : w)
    if (keep_.at(g)) out.push_back(g);
  return out;
}

Retraction retraction(const Polytope& p, FacetIndex f) {
  if (f >= p.facet_count()) throw std::out_of_range("facet index out of range");
  return Retraction(p, f);
}

bool check_retraction_compat(const VectorHom& phi, const Retraction& r, F2Vec block) {
  for (Generator g = 0; g < phi.images.size(); ++g) {
    F2Vec retracted = r.keeps(g) ? phi.images[g] : F2Vec{};
    if (phi.images[g].project(block) != retracted) return false;
  }
  return true;
}

}  // namespace ractor
