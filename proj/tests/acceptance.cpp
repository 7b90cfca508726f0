// SPDX-License-Identifier: Apache-2.0
// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ractor/pipeline.hpp"
#include "ractor/racg.hpp"
#include "snf_oracle.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ractor;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RACTOR_CLI) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string csv_without_timing(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

json without_elapsed(json doc) {
  doc.erase("elapsed_ms");
  return doc;
}

// Rank over F2 by plain Gaussian elimination on bit masks.
std::size_t rank2(std::vector<std::uint64_t> v) {
  std::size_t r = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto it = std::find_if(v.begin() + static_cast<long>(r), v.end(),
                           [bit](std::uint64_t x) { return x >> bit & 1u; });
    if (it == v.end()) continue;
    std::iter_swap(v.begin() + static_cast<long>(r), it);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != r && (v[i] >> bit & 1u)) v[i] ^= v[r];
    ++r;
  }
  return r;
}

std::uint64_t bits_of(const std::string& s) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '1') b |= std::uint64_t{1} << i;
  return b;
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

const fs::path& scratch() {
  static const fs::path dir = [] {
    std::random_device rd;
    auto d = fs::temp_directory_path() / ("ractor-acceptance-" + std::to_string(rd()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Outcome ac1() {
  Outcome o;
  const fs::path cert = scratch() / "ac1.json";
  const auto t0 = Clock::now();
  const int code = run_cli("verify-base --out " + cert.string());
  const double secs = seconds_since(t0);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  if (code != 0) return o;
  const json doc = json::parse(slurp(cert));
  o.require(doc["passed"] == true, "certificate not passed");
  o.require(doc["image_rank"] == 7, "image rank");
  for (const char* name : {"C2_vertex_independence", "O_orientation_character", "retraction_compat_first",
                           "retraction_compat_second", "SN_witness"}) {
    bool found = false;
    for (const auto& c : doc["checks"])
      if (c["name"] == name) found = c["passed"] == true;
    o.require(found, std::string(name) + " missing or failed");
  }

  // Recheck the colouring from the certificate against the polytope directly.
  const Polytope p = build_builtin("dodecahedron");
  std::vector<std::uint64_t> colour(p.facet_count());
  for (FacetIndex f = 0; f < p.facet_count(); ++f)
    colour[f] = bits_of(doc["coloring"]["colors"][p.facet_name(f)].get<std::string>());
  o.require(rank2(colour) == 7, "colours do not span F2^7");
  std::size_t independent = 0;
  for (const auto& v : p.vertices()) {
    std::vector<std::uint64_t> c;
    for (FacetIndex f : v) c.push_back(colour[f]);
    if (rank2(c) == v.size()) ++independent;
  }
  o.require(p.vertices().size() == 20 && independent == 20, "vertex cliques not independent");
  for (std::uint64_t c : colour) o.require(std::popcount(c) % 2 == 1, "colour of even weight");
  std::uint64_t pi = 0;
  for (const auto& name : doc["nonorientable_witness"]) {
    for (FacetIndex f = 0; f < p.facet_count(); ++f)
      if (p.facet_name(f) == name.get<std::string>()) pi ^= colour[f];
  }
  o.require(!doc["nonorientable_witness"].empty() && pi == 0, "witness word does not map to 0");
  o.detail = o.ok ? "exit 0, rank 7, 20/20 vertices, " + std::to_string(secs).substr(0, 5) + " s" : o.detail;
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto t0 = Clock::now();
  const BaseCase b = verify_base(build_builtin("dodecahedron"), std::nullopt);
  const double secs = seconds_since(t0);
  o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  if (!b.surface || !b.surface_opposite) {
    o.require(false, "surfaces missing");
    return o;
  }
  // Right-angled pentagons: four meet at each vertex, so E = 5F/2, V = 5F/4
  // and chi = F(4 - 5)/4. H1 follows from chi and orientability.
  auto oracle_check = [&o](const SurfaceSummary& s, std::size_t faces, bool orientable, const std::string& tag) {
    const long f = static_cast<long>(faces);
    const long chi = -f / 4;
    o.require(s.faces == faces && s.edges == static_cast<std::size_t>(5 * f / 2) &&
                  s.vertices == static_cast<std::size_t>(5 * f / 4),
              tag + " cell counts");
    o.require(s.euler_characteristic == chi, tag + " chi");
    o.require(s.orientable == orientable && s.two_sided == orientable, tag + " orientability");
    zsmith::TorsionProfile h1;
    h1.betti = static_cast<std::size_t>(orientable ? 2 - chi : 1 - chi);
    if (!orientable) h1.invariant_factors = {2};
    o.require(s.h1 == h1, tag + " H1 = " + s.h1.to_string());
  };
  oracle_check(*b.surface, 8, true, "S");
  oracle_check(*b.surface_opposite, 4, false, "S'");
  o.require(b.surface->euler_characteristic == -2 && b.surface->h1.to_string() == "Z^4", "S literal values");
  o.require(b.surface_opposite->euler_characteristic == -1 && b.surface_opposite->h1.to_string() == "Z^2 + Z/2",
            "S' literal values");
  if (o.ok) o.detail = "S (8,20,10) chi -2 Z^4; S' (4,10,5) chi -1 Z^2 + Z/2";
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto t0 = Clock::now();
  const fs::path csv = scratch() / "ac3.csv";
  const int code = run_cli("growth --max-p 3 --out " + csv.string());
  const double secs = seconds_since(t0);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(secs < 600.0, "took " + std::to_string(secs) + " s");
  std::istringstream in(slurp(csv));
  std::string line, summary;
  std::getline(in, line);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 7) {
      o.require(false, "malformed row " + line);
      continue;
    }
    const std::size_t p = std::stoul(f[0]);
    ++rows;
    o.require(std::stoul(f[1]) == 128 * p, "index at p=" + f[0]);
    o.require(std::stoul(f[4]) >= p, "two_rank " + f[4] + " at p=" + f[0]);
    std::size_t even = 0;
    std::stringstream fs_(f[3]);
    for (std::string d; std::getline(fs_, d, ';');)
      if (!d.empty() && mpz_class(d) % 2 == 0) ++even;
    o.require(even == std::stoul(f[4]), "two_rank does not match factors at p=" + f[0]);
    summary += " p=" + f[0] + ":" + f[4];
  }
  o.require(rows == 3, "expected 3 rows");
  if (o.ok) o.detail = "two_rank" + summary + ", " + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

Outcome ac4() {
  Outcome o;
  const BaseCase b = verify_base(build_builtin("dodecahedron"), std::nullopt);
  for (std::size_t p : {1u, 2u}) {
    const CoverResult r = cover_homology(b, p, Method::both, 1);
    o.require(r.rs && r.cells, "missing profile at p=" + std::to_string(p));
    if (r.rs && r.cells) {
      o.require(r.rs->betti == r.cells->h1.betti, "Betti differs at p=" + std::to_string(p));
      o.require(r.rs->invariant_factors == r.cells->h1.invariant_factors,
                "factors differ at p=" + std::to_string(p));
      if (p == 2 && o.ok) o.detail = "p=1,2 agree; p=2 H1 = " + r.rs->to_string().substr(0, 40) + "...";
    }
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  const BaseCase b = verify_base(build_builtin("dodecahedron"), std::nullopt);
  const ChamberComplex& cx = *b.complex;
  for (std::size_t q = 0; q < cx.chamber_count(); ++q)
    for (FacetIndex f = 0; f < cx.facet_count(); ++f)
      o.require(cx.glue(cx.glue(q, f), f) == q, "gluing not an involution");
  for (std::size_t p = 1; p <= 3; ++p) {
    const CoverAction a(cx, *b.wall, p);
    o.require(a.generators_are_involutions(), "cover permutation not an involution at p=" + std::to_string(p));
    const CoverResult r = cover_homology(b, p, Method::cells, 1);
    o.require(r.cells && r.cells->euler_characteristic == 0, "chi != 0 at p=" + std::to_string(p));
  }
  const RacgPresentation pres = presentation(b.polytope);
  std::size_t evaluations = 0, nonzero = 0;
  for (std::size_t q = 0; q < cx.chamber_count(); ++q)
    for (const Word& rel : pres.relators) {
      ++evaluations;
      if (psi(cx, *b.wall, q, rel) != 0) ++nonzero;
    }
  o.require(pres.relators.size() == 42 && cx.chamber_count() == 128, "relator or chamber count");
  o.require(nonzero == 0, std::to_string(nonzero) + " nonzero psi evaluations");
  if (o.ok) o.detail = "chi 0 for p=1..3, involutions, psi = 0 on " + std::to_string(evaluations) + " evaluations";
  return o;
}

Outcome ac6() {
  Outcome o;
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> dim(1, 6), val(-5, 5);
  std::size_t certified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<long>> d(rows, std::vector<long>(cols));
    oracle::Mat m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = d[i][j] = val(rng);
    const auto a = zsmith::SparseIntMatrix::from_dense(d, cols);
    const auto got = zsmith::snf(a).diagonal;
    auto want = oracle::elementary(m);
    o.require(got == want, "mismatch on trial " + std::to_string(trial));
    if (trial % 4 == 0) {
      zsmith::SnfOptions opts;
      opts.track_transforms = true;
      const auto r = zsmith::snf(a, opts);
      const bool good = r.left && r.right && abs(zsmith::determinant(*r.left)) == 1 &&
                        abs(zsmith::determinant(*r.right)) == 1 &&
                        *r.left * a.to_dense() * *r.right == zsmith::diagonal_matrix(rows, cols, r.diagonal);
      o.require(good, "U A V != D on trial " + std::to_string(trial));
      ++certified;
    }
  }
  if (o.ok) o.detail = "200 matrices match, " + std::to_string(certified) + " certified";
  return o;
}

Outcome ac7() {
  Outcome o;
  const fs::path d = scratch();
  auto cert = [&](const std::string& tag) {
    const fs::path f = d / (tag + ".json");
    o.require(run_cli("verify-base --out " + f.string()) == 0, tag + " failed");
    return without_elapsed(json::parse(slurp(f)));
  };
  o.require(cert("base1") == cert("base2"), "certificates differ between runs");
  o.require(run_cli("color-search --out " + (d / "c1.json").string()) == 0 &&
                run_cli("color-search --out " + (d / "c2.json").string()) == 0 &&
                slurp(d / "c1.json") == slurp(d / "c2.json"),
            "colour search differs between runs");
  auto growth = [&](const std::string& tag, unsigned threads) {
    const fs::path f = d / (tag + ".csv");
    o.require(run_cli("growth --max-p 3 --method both --threads " + std::to_string(threads) + " --out " +
                      f.string()) == 0,
              tag + " failed");
    return std::make_pair(csv_without_timing(slurp(f)), slurp(d / (tag + ".compare.csv")));
  };
  const auto t1 = growth("t1", 1), t1b = growth("t1b", 1), t8 = growth("t8", 8);
  o.require(t1 == t1b, "growth differs between runs");
  o.require(t1 == t8, "growth differs between 1 and 8 threads");
  if (o.ok) o.detail = "repeat runs and threads 1/8 identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 base-case certificate", ac1},     {"AC2 surface invariants", ac2},
      {"AC3 torsion growth p=1..3", ac3},     {"AC4 RS equals cellular at p=1,2", ac4},
      {"AC5 topological sanity", ac5},        {"AC6 SNF oracle equivalence", ac6},
      {"AC7 determinism", ac7}};
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    if (!o.ok) ++failures;
  }
  fs::remove_all(scratch());
  return failures == 0 ? 0 : 1;
}
