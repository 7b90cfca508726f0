// SPDX-License-Identifier: Apache-2.0
#include "ractor/pipeline.hpp"

#include <chrono>
#include <deque>
#include <map>

#include <json.hpp>

#include "ractor/io.hpp"

namespace ractor {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

std::size_t millis_since(Clock::time_point start) {
  return static_cast<std::size_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

SurfaceSummary summarize(const ChamberComplex& cx, const Wall& w, bool two_sided) {
  const SurfaceComplex s = surface_complex(cx, w);
  SurfaceSummary out;
  out.faces = s.face_count();
  out.edges = s.edge_count();
  out.vertices = s.vertices();
  out.euler_characteristic = s.euler_characteristic();
  out.orientable = orientable(s);
  out.two_sided = two_sided;
  out.h1 = surface_h1(s);
  return out;
}

// Shortest word returning to chamber 0 (so in the kernel of the colouring)
// with signed crossing count +-1.
std::optional<std::pair<Word, long>> psi_witness(const ChamberComplex& cx, const CoorientedWall& s) {
  constexpr long bound = 4;
  const std::size_t width = 2 * bound + 1;
  const std::size_t states = cx.chamber_count() * width;
  auto state = [&](std::size_t q, long v) { return q * width + static_cast<std::size_t>(v + bound); };
  std::vector<std::int64_t> parent(states, -1);
  std::vector<Generator> letter(states, 0);
  const std::size_t start = state(0, 0);
  parent[start] = static_cast<std::int64_t>(start);
  std::deque<std::size_t> todo{start};
  while (!todo.empty()) {
    const std::size_t cur = todo.front();
    todo.pop_front();
    const std::size_t q = cur / width;
    const long v = static_cast<long>(cur % width) - bound;
    if (q == 0 && (v == 1 || v == -1)) {
      Word w;
      for (std::size_t x = cur; x != start; x = static_cast<std::size_t>(parent[x])) w.push_back(letter[x]);
      std::reverse(w.begin(), w.end());
      return std::make_pair(w, v);
    }
    for (Generator g = 0; g < cx.facet_count(); ++g) {
      const long nv = v + s.sign(cx, {q, g});
      if (nv < -bound || nv > bound) continue;
      const std::size_t next = state(cx.glue(q, g), nv);
      if (parent[next] >= 0) continue;
      parent[next] = static_cast<std::int64_t>(cur);
      letter[next] = g;
      todo.push_back(next);
    }
  }
  return std::nullopt;
}

std::string word_string(const Polytope& p, const Word& w) {
  std::string s;
  for (Generator g : w) s += (s.empty() ? "" : " ") + p.facet_name(g);
  return s;
}

ordered_json word_json(const Polytope& p, const Word& w) {
  ordered_json out = ordered_json::array();
  for (Generator g : w) out.push_back(p.facet_name(g));
  return out;
}

ordered_json surface_json(const SurfaceSummary& s) {
  ordered_json out;
  out["faces"] = s.faces;
  out["edges"] = s.edges;
  out["vertices"] = s.vertices;
  out["euler_characteristic"] = s.euler_characteristic;
  out["orientable"] = s.orientable;
  out["two_sided"] = s.two_sided;
  out["h1_betti"] = s.h1.betti;
  out["h1_invariant_factors"] = s.h1.factors_string(';');
  out["h1"] = s.h1.to_string();
  return out;
}

}  // namespace

bool BaseCase::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const Check* BaseCase::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

FacetIndex base_facet_of(const Polytope& p, const FacetColoring& c) {
  std::vector<FacetIndex> hits;
  for (FacetIndex f = 0; f < c.colors.size() && f < p.facet_count(); ++f)
    if (c.colors[f] == palette::delta) hits.push_back(f);
  return hits.size() == 1 ? hits.front() : 0;
}

FacetColoring search_coloring(const Polytope& p) {
  if (p.facet_count() == 0) throw ColoringError("polytope has no facets");
  FacetIndex opp;
  try {
    opp = opposite_facet(p, 0);
  } catch (const std::domain_error& e) {
    throw ColoringError(std::string("closed stars do not partition the facets: ") + e.what());
  }
  return search_admissible(p, 0, opp);
}

BaseCase verify_base(const Polytope& p, const std::optional<FacetColoring>& coloring) {
  const auto start = Clock::now();
  BaseCase b(p);
  auto add = [&](std::string name, bool ok, std::string detail) {
    b.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  auto finish = [&]() -> BaseCase& {
    b.elapsed_ms = millis_since(start);
    return b;
  };

  const ValidationReport report = validate(p);
  {
    std::string detail = report.ok() ? "valid" : "";
    for (const auto& v : report.violations) detail += (detail.empty() ? "" : "; ") + v;
    add("polytope_valid", report.ok(), detail);
  }
  if (!report.ok()) return finish();

  if (coloring) {
    b.coloring = *coloring;
    b.base = base_facet_of(p, b.coloring);
  } else {
    b.base = 0;
  }
  try {
    b.opposite = opposite_facet(p, b.base);
    add("opposite_facet", true, p.facet_name(b.base) + " / " + p.facet_name(b.opposite));
  } catch (const std::domain_error& e) {
    add("opposite_facet", false, e.what());
    return finish();
  }
  if (!coloring) {
    try {
      b.coloring = search_admissible(p, b.base, b.opposite);
      add("coloring_search", true, "admissible colouring found");
    } catch (const ColoringError& e) {
      add("coloring_search", false, e.what());
      return finish();
    }
  }

  const Certificate cert = certify(p, b.coloring, b.base, b.opposite);
  for (const auto& c : cert.checks) b.checks.push_back(c);
  b.nonorientable_witness = cert.nonorientable_witness;

  try {
    b.complex.emplace(p, b.coloring);
  } catch (const std::domain_error& e) {
    add("chambers_built", false, e.what());
    return finish();
  }
  const ChamberComplex& cx = *b.complex;
  {
    const auto& counts = cx.cell_counts();
    bool ok = true;
    std::string detail;
    const auto faces = polytope_faces(p);
    std::vector<std::size_t> expected(counts.size(), 0);
    for (const auto& face : faces)
      if (face.size() < expected.size()) expected[face.size()] += cx.chamber_count() >> face.size();
    for (std::size_t k = 0; k < counts.size(); ++k) {
      ok = ok && counts[k] == expected[k];
      detail += (k ? "," : "") + std::to_string(counts[k]);
    }
    add("chambers_built", true, std::to_string(cx.chamber_count()) + " chambers");
    add("cell_counts", ok, "cells by codimension " + detail);
    add("euler_characteristic", cx.euler_characteristic() == 0,
        "chi = " + std::to_string(cx.euler_characteristic()));
  }
  {
    bool ok = true;
    for (std::size_t q = 0; q < cx.chamber_count(); ++q)
      for (FacetIndex f = 0; f < cx.facet_count(); ++f) ok = ok && cx.glue(cx.glue(q, f), f) == q;
    add("gluing_involutions", ok, ok ? "every gluing squares to the identity" : "a gluing is not an involution");
  }

  b.wall_count = all_walls(cx).size();
  const Wall ws = wall_of(cx, 0, b.base);
  const Wall wo = wall_of(cx, 0, b.opposite);
  auto cs = coorient(cx, ws);
  auto co = coorient(cx, wo);
  const bool s_two_sided = std::holds_alternative<CoorientedWall>(cs);
  const bool o_two_sided = std::holds_alternative<CoorientedWall>(co);
  add("S_coorientable", s_two_sided,
      std::to_string(ws.cells().size()) + " cells, " + std::to_string(ws.face_count()) + " faces");
  add("S_prime_one_sided", !o_two_sided,
      o_two_sided ? "wall is co-orientable"
                  : "side flips " + std::to_string(std::get<NonCoorientable>(co).flips) +
                        " times around a cycle of " + std::to_string(std::get<NonCoorientable>(co).cycle.size()) +
                        " cells");

  if (p.dimension() == 3) {
    try {
      b.surface = summarize(cx, ws, s_two_sided);
      b.surface_opposite = summarize(cx, wo, o_two_sided);
      const auto& s = *b.surface;
      const auto& so = *b.surface_opposite;
      add("S_orientable", s.orientable, "chi = " + std::to_string(s.euler_characteristic) + ", H1 = " + s.h1.to_string());
      add("S_prime_nonorientable", !so.orientable,
          "chi = " + std::to_string(so.euler_characteristic) + ", H1 = " + so.h1.to_string());
      add("S_prime_h1_order_two", so.h1.two_rank() >= 1, "H1 = " + so.h1.to_string());
      add("sidedness_matches_orientability", s.orientable == s.two_sided && so.orientable == so.two_sided,
          "two-sided walls are exactly the orientable ones");

      bool ok = true;
      std::string detail = std::to_string(b.wall_count) + " walls classified";
      for (const Wall& w : all_walls(cx)) {
        const SurfaceComplex sc = surface_complex(cx, w);
        const bool orient = orientable(sc);
        const auto h1 = surface_h1(sc);
        const bool even = sc.euler_characteristic() % 2 == 0;
        const bool z2 = h1.invariant_factors.size() == 1 && h1.invariant_factors[0] == 2;
        if (orient && (!even || !h1.invariant_factors.empty())) ok = false;
        if (!orient && !z2) ok = false;
        if (!ok) {
          detail = "wall through chamber " + std::to_string(w.seed().chamber) + " facet " +
                   p.facet_name(w.seed().facet) + " contradicts the surface classification";
          break;
        }
      }
      add("wall_surfaces_classified", ok, detail);
    } catch (const SurfaceError& e) {
      add("wall_surfaces", false, e.what());
    }
  }

  if (s_two_sided) {
    b.wall = std::get<CoorientedWall>(cs);
    const RacgPresentation pres = presentation(p);
    std::size_t nonzero = 0;
    for (std::size_t q = 0; q < cx.chamber_count(); ++q)
      for (const Word& r : pres.relators)
        if (psi(cx, *b.wall, q, r) != 0) ++nonzero;
    b.psi_nonzero = nonzero;
    add("psi_cocycle", nonzero == 0,
        std::to_string(pres.relators.size()) + " relators x " + std::to_string(cx.chamber_count()) +
            " chambers, " + std::to_string(nonzero) + " nonzero");
    if (auto w = psi_witness(cx, *b.wall)) {
      b.psi_witness = w->first;
      b.psi_witness_value = w->second;
      const bool in_kernel = b.coloring.hom().eval(b.psi_witness).is_zero();
      const bool value_ok = psi(cx, *b.wall, 0, b.psi_witness) == b.psi_witness_value;
      add("psi_surjective", in_kernel && value_ok,
          "psi(" + word_string(p, b.psi_witness) + ") = " + std::to_string(b.psi_witness_value));
    } else {
      add("psi_surjective", false, "no kernel word crosses the wall once");
    }
  }
  return finish();
}

std::string BaseCase::certificate_json() const {
  ordered_json doc;
  ordered_json poly;
  poly["name"] = polytope.name();
  poly["dimension"] = polytope.dimension();
  poly["facets"] = polytope.facet_count();
  poly["adjacent_pairs"] = polytope.edges().size();
  poly["vertices"] = polytope.vertices().size();
  doc["polytope"] = poly;
  if (base < polytope.facet_count()) doc["base_facet"] = polytope.facet_name(base);
  if (opposite < polytope.facet_count()) doc["opposite_facet"] = polytope.facet_name(opposite);
  if (coloring.colors.size() == polytope.facet_count())
    doc["coloring"] = ordered_json::parse(coloring_to_json(polytope, coloring));
  doc["image_rank"] = coloring.image_rank();

  ordered_json checks_json = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    checks_json.push_back(j);
  }
  doc["checks"] = checks_json;

  if (complex) {
    ordered_json ch;
    ch["chambers"] = complex->chamber_count();
    ch["cells_by_codimension"] = complex->cell_counts();
    ch["euler_characteristic"] = complex->euler_characteristic();
    ch["walls"] = wall_count;
    doc["chamber_complex"] = ch;
  }
  if (surface && surface_opposite) {
    ordered_json s;
    s["S"] = surface_json(*surface);
    s["S_prime"] = surface_json(*surface_opposite);
    doc["surfaces"] = s;
  }
  doc["nonorientable_witness"] = word_json(polytope, nonorientable_witness);
  if (wall) {
    ordered_json ps;
    ps["nonzero_relator_evaluations"] = psi_nonzero;
    ps["witness"] = word_json(polytope, psi_witness);
    ps["witness_value"] = psi_witness_value;
    doc["psi"] = ps;
  }
  doc["passed"] = passed();
  doc["elapsed_ms"] = elapsed_ms;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

const zsmith::TorsionProfile& CoverResult::profile() const {
  if (rs) return *rs;
  if (cells) return cells->h1;
  throw std::logic_error("cover result without homology");
}

bool CoverResult::agree() const { return !rs || !cells || *rs == cells->h1; }

CoverResult cover_homology(const BaseCase& b, std::size_t p, Method method, unsigned threads) {
  if (!b.complex || !b.wall) throw std::logic_error("base case has no co-oriented wall");
  if (p == 0) throw std::invalid_argument("cover degree must be positive");
  const auto start = Clock::now();
  const CoverAction a(*b.complex, *b.wall, p);
  CoverResult out;
  out.p = p;
  out.index = a.orbit_size(a.basepoint());
  out.involutions = a.generators_are_involutions();
  zsmith::SnfOptions opts;
  opts.threads = threads == 0 ? 1 : threads;
  if (method != Method::cells) {
    const SchreierData d(a);
    const auto m = abelianized_relator_matrix(a, d, presentation(b.polytope));
    out.rs_rows = m.rows();
    out.rs_cols = m.cols();
    out.rs = zsmith::torsion_profile(m, d.column_count(), opts);
  }
  if (method != Method::rs) out.cells = homology_via_cells(a, *b.complex, opts);
  out.elapsed_ms = millis_since(start);
  return out;
}

}  // namespace ractor
