// SPDX-License-Identifier: Apache-2.0
#include "ractor/coloring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ractor {

namespace {

// Backtracking over facets in index order; candidates tried in the given order.
std::optional<FacetColoring> backtrack(const Polytope& p, unsigned bits,
                                       const std::vector<std::vector<F2Vec>>& candidates) {
  const std::size_t n = p.facet_count();
  std::vector<F2Vec> colors(n);

  // Vertices whose largest facet is f are complete once f is assigned.
  std::vector<std::vector<const FacetSet*>> closing(n);
  for (const auto& v : p.vertices())
    if (!v.empty()) closing[v.back()].push_back(&v);

  std::function<bool(FacetIndex)> place = [&](FacetIndex f) -> bool {
    if (f == n) return true;
    for (F2Vec c : candidates[f]) {
      bool ok = !c.is_zero();
      for (FacetIndex g : p.neighbours(f))
        if (g < f && colors[g] == c) ok = false;
      colors[f] = c;
      for (const FacetSet* v : closing[f]) {
        if (!ok) break;
        std::vector<F2Vec> vc;
        for (FacetIndex g : *v) vc.push_back(colors[g]);
        if (f2_rank(vc) != v->size()) ok = false;
      }
      if (ok) {
        if (place(f + 1)) return true;
      }
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return FacetColoring{bits, colors};
}

bool contains(const FacetSet& s, FacetIndex f) {
  return std::binary_search(s.begin(), s.end(), f);
}

std::string names(const Polytope& p, const FacetSet& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << p.facet_name(s[i]);
  return out.str();
}

}  // namespace

FacetColoring search_admissible(const Polytope& p, FacetIndex f, FacetIndex f_opposite) {
  const std::size_t n = p.facet_count();
  if (f >= n || f_opposite >= n) throw ColoringError("facet index out of range");
  const FacetSet star = p.closed_star(f);
  const FacetSet star_opp = p.closed_star(f_opposite);
  for (FacetIndex g = 0; g < n; ++g)
    if (contains(star, g) == contains(star_opp, g))
      throw ColoringError("closed stars of '" + p.facet_name(f) + "' and '" +
                          p.facet_name(f_opposite) + "' do not partition the facets");

  std::vector<std::vector<F2Vec>> candidates(n);
  for (FacetIndex g = 0; g < n; ++g) {
    if (g == f)
      candidates[g] = {palette::delta};
    else if (g == f_opposite)
      candidates[g] = {palette::delta_p};
    else if (contains(star, g))
      candidates[g] = {palette::alpha, palette::beta, palette::gamma};
    else
      candidates[g] = {palette::alpha_p, palette::beta_p, palette::gamma_p};
  }
  auto found = backtrack(p, palette::bits, candidates);
  if (!found) throw ColoringError("no admissible colouring exists");
  return *found;
}

FacetColoring four_colour(const Polytope& p) {
  std::vector<std::vector<F2Vec>> candidates(
      p.facet_count(), std::vector<F2Vec>(std::begin(palette::generic::all),
                                          std::end(palette::generic::all)));
  auto found = backtrack(p, 3, candidates);
  if (!found) throw ColoringError("no proper four-colouring exists");
  return *found;
}

std::vector<std::pair<FacetIndex, FacetIndex>> proper_violations(const Polytope& p,
                                                                 const FacetColoring& c) {
  std::vector<std::pair<FacetIndex, FacetIndex>> bad;
  for (auto [a, b] : p.edges())
    if (c.colors[a] == c.colors[b]) bad.emplace_back(a, b);
  return bad;
}

std::vector<FacetSet> independence_violations(const Polytope& p, const FacetColoring& c) {
  std::vector<FacetSet> bad;
  for (const auto& v : p.vertices()) {
    std::vector<F2Vec> vc;
    for (FacetIndex g : v) vc.push_back(c.colors[g]);
    if (f2_rank(vc) != v.size()) bad.push_back(v);
  }
  return bad;
}

bool Certificate::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Certificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Certificate certify(const Polytope& p, const FacetColoring& c, FacetIndex f, FacetIndex f_opposite) {
  Certificate cert;
  cert.base = f;
  cert.opposite = f_opposite;
  cert.image_rank = c.image_rank();
  const std::size_t n = p.facet_count();
  auto add = [&](std::string name, bool ok, std::string detail) {
    cert.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  if (c.colors.size() != n) {
    add("shape", false, "colouring has " + std::to_string(c.colors.size()) + " colours for " +
                            std::to_string(n) + " facets");
    return cert;
  }

  add("image_rank", cert.image_rank == c.bits,
      "rank " + std::to_string(cert.image_rank) + " of " + std::to_string(c.bits));

  {
    auto bad = proper_violations(p, c);
    std::string detail = bad.empty() ? "all adjacent pairs distinct" : "equal colours on";
    for (auto [a, b] : bad) detail += " (" + p.facet_name(a) + "," + p.facet_name(b) + ")";
    add("C1_adjacent_distinct", bad.empty(), detail);
  }
  {
    auto bad = independence_violations(p, c);
    std::string detail = bad.empty() ? std::to_string(p.vertices().size()) + " vertices independent"
                                     : "dependent colours at";
    for (const auto& v : bad) detail += " {" + names(p, v) + "}";
    add("C2_vertex_independence", bad.empty(), detail);
  }

  const FacetSet star = p.closed_star(f);
  const FacetSet star_opp = p.closed_star(f_opposite);
  {
    std::string detail;
    bool ok = c.bits == palette::bits;
    if (!ok) detail = "bit width is not 7";
    auto in = [](F2Vec v, std::initializer_list<F2Vec> set) {
      return std::find(set.begin(), set.end(), v) != set.end();
    };
    for (FacetIndex g = 0; g < n && ok; ++g) {
      bool good;
      if (contains(star, g) == contains(star_opp, g))
        good = false;
      else if (g == f)
        good = c.colors[g] == palette::delta;
      else if (g == f_opposite)
        good = c.colors[g] == palette::delta_p;
      else if (contains(star, g))
        good = in(c.colors[g], {palette::alpha, palette::beta, palette::gamma});
      else
        good = in(c.colors[g], {palette::alpha_p, palette::beta_p, palette::gamma_p});
      if (!good) {
        ok = false;
        detail = "facet '" + p.facet_name(g) + "' breaks the block structure";
      }
    }
    add("C3_block_structure", ok, ok ? "stars coloured from their summands" : detail);
  }

  {
    std::string detail = "every colour has odd weight";
    bool ok = true;
    for (FacetIndex g = 0; g < n; ++g)
      if (c.colors[g].weight() % 2 == 0) {
        ok = false;
        detail = "facet '" + p.facet_name(g) + "' has even colour weight";
        break;
      }
    add("O_orientation_character", ok, detail);
  }

  const VectorHom phi = c.hom();
  const Retraction r = retraction(p, f);
  const Retraction r_opp = retraction(p, f_opposite);
  add("retraction_compat_first", check_retraction_compat(phi, r, palette::first_block),
      "rho o phi = phi o r at '" + p.facet_name(f) + "'");
  add("retraction_compat_second", check_retraction_compat(phi, r_opp, palette::second_block),
      "rho' o phi = phi o r' at '" + p.facet_name(f_opposite) + "'");
  {
    bool ok = true;
    for (FacetIndex g : star_opp) ok = ok && r.apply({g}).empty();
    for (FacetIndex g : star) ok = ok && r_opp.apply({g}).empty();
    add("retraction_independence", ok, "r kills Stab(H') and r' kills Stab(H) on generators");
  }

  {
    const VectorHom sigma = phi.character(palette::wall_character);
    bool ok = sigma.images[f].is_zero();
    for (FacetIndex g : p.neighbours(f)) ok = ok && !sigma.images[g].is_zero();
    add("SO_wall_character", ok, "sum of first three coordinates is 0 on f and 1 on its neighbours");
  }

  {
    Word pi{f_opposite};
    for (F2Vec target : {palette::alpha_p, palette::beta_p, palette::gamma_p}) {
      for (FacetIndex g : p.neighbours(f_opposite))
        if (c.colors[g] == target) {
          pi.push_back(g);
          break;
        }
    }
    const bool ok = pi.size() == 4 && phi.eval(pi).is_zero();
    std::string detail = "pi = ";
    for (std::size_t i = 0; i < pi.size(); ++i) detail += (i ? "*" : "") + p.facet_name(pi[i]);
    add("SN_witness", ok, ok ? detail + " with phi(pi) = 0" : "no witness among neighbours of f'");
    if (ok) cert.nonorientable_witness = pi;
  }
  return cert;
}

}  // namespace ractor
