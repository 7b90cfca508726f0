// SPDX-License-Identifier: Apache-2.0
// Command-line driver; talks to the library only through ractor.h.
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ractor/ractor.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Config {
  std::string polytope = "builtin:dodecahedron";
  std::string coloring = "auto";
  std::size_t max_p = 3;
  std::string method = "rs";
  std::string out;
  unsigned threads = 1;
};

struct Deleter {
  void operator()(ractor_polytope* p) const { ractor_polytope_free(p); }
  void operator()(ractor_coloring* c) const { ractor_coloring_free(c); }
  void operator()(ractor_base* b) const { ractor_base_free(b); }
  void operator()(ractor_homology* h) const { ractor_homology_free(h); }
  void operator()(char* s) const { ractor_string_free(s); }
};
template <class T>
using Handle = std::unique_ptr<T, Deleter>;

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(ractor_status s) {
  return s == RACTOR_ERR_INPUT || s == RACTOR_ERR_ARGUMENT ? kInputError : kFail;
}

void check(ractor_status s, const std::string& what) {
  if (s != RACTOR_OK) throw Failure{exit_code_for(s), what + ": " + ractor_last_error()};
}

std::string take(char* s) {
  Handle<char> owned(s);
  return s ? std::string(s) : std::string();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kInputError, "cannot write '" + path + "'"};
}

Handle<ractor_polytope> load_polytope(const Config& cfg) {
  ractor_polytope* p = nullptr;
  check(ractor_polytope_load(cfg.polytope.c_str(), &p), "polytope");
  return Handle<ractor_polytope>(p);
}

Handle<ractor_coloring> load_coloring(const Config& cfg, const ractor_polytope* p) {
  if (cfg.coloring == "auto") return nullptr;
  ractor_coloring* c = nullptr;
  check(ractor_coloring_load(p, cfg.coloring.c_str(), &c), "colouring");
  return Handle<ractor_coloring>(c);
}

Handle<ractor_base> verify(const Config& cfg, const ractor_polytope* p) {
  auto c = load_coloring(cfg, p);
  ractor_base* b = nullptr;
  check(ractor_base_verify(p, c.get(), &b), "base case");
  return Handle<ractor_base>(b);
}

void report_checks(const ractor_base* b, std::ostream& log) {
  for (std::size_t i = 0; i < ractor_base_check_count(b); ++i)
    log << (ractor_base_check_passed(b, i) ? "PASS " : "FAIL ") << ractor_base_check_name(b, i) << ": "
        << ractor_base_check_detail(b, i) << '\n';
}

int cmd_verify_base(const Config& cfg) {
  auto p = load_polytope(cfg);
  auto b = verify(cfg, p.get());
  report_checks(b.get(), std::cerr);
  char* json = nullptr;
  check(ractor_base_certificate_json(b.get(), &json), "certificate");
  write_output(cfg.out, take(json));
  return ractor_base_passed(b.get()) ? kPass : kFail;
}

int cmd_color_search(const Config& cfg) {
  auto p = load_polytope(cfg);
  ractor_coloring* c = nullptr;
  check(ractor_coloring_search(p.get(), &c), "colour search");
  Handle<ractor_coloring> owned(c);
  char* json = nullptr;
  check(ractor_coloring_to_json(c, &json), "colouring");
  write_output(cfg.out, take(json));
  return kPass;
}

ractor_method parse_method(const std::string& m) {
  if (m == "rs") return RACTOR_METHOD_RS;
  if (m == "cells") return RACTOR_METHOD_CELLS;
  return RACTOR_METHOD_BOTH;
}

std::string factors(const ractor_homology* h, ractor_method which) {
  char* s = nullptr;
  check(ractor_homology_factors(h, which, &s), "factors");
  return take(s);
}

int cmd_growth(const Config& cfg) {
  auto p = load_polytope(cfg);
  auto b = verify(cfg, p.get());
  if (!ractor_base_passed(b.get())) {
    report_checks(b.get(), std::cerr);
    std::cerr << "base case failed; no covers computed\n";
    return kFail;
  }
  const ractor_method method = parse_method(cfg.method);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(cfg.threads, cfg.max_p));
  const unsigned inner = std::max(1u, cfg.threads / std::max(1u, workers));

  std::vector<Handle<ractor_homology>> results(cfg.max_p);
  std::vector<ractor_status> status(cfg.max_p, RACTOR_OK);
  std::vector<std::string> errors(cfg.max_p);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cfg.max_p; i = next++) {
      ractor_homology* h = nullptr;
      status[i] = ractor_cover_homology(b.get(), i + 1, method, inner, &h);
      if (status[i] == RACTOR_OK)
        results[i].reset(h);
      else
        errors[i] = ractor_last_error();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  const ractor_method primary = method == RACTOR_METHOD_CELLS ? RACTOR_METHOD_CELLS : RACTOR_METHOD_RS;
  std::ostringstream csv, compare;
  csv << "p,index,b1,invariant_factors,two_rank,log2_lb,elapsed_ms\n";
  compare << "p,rs_b1,rs_invariant_factors,cells_b1,cells_invariant_factors,agree\n";
  bool ok = true;
  for (std::size_t i = 0; i < cfg.max_p; ++i) {
    const std::size_t pp = i + 1;
    if (status[i] != RACTOR_OK) {
      std::cerr << "p=" << pp << ": " << errors[i] << '\n';
      ok = false;
      continue;
    }
    const ractor_homology* h = results[i].get();
    const std::size_t two = ractor_homology_two_rank(h, primary);
    csv << pp << ',' << ractor_homology_index(h) << ',' << ractor_homology_betti(h, primary) << ','
        << factors(h, primary) << ',' << two << ',' << two << ',' << ractor_homology_elapsed_ms(h) << '\n';
    if (two < pp) {
      std::cerr << "p=" << pp << ": 2-rank " << two << " is below " << pp << '\n';
      ok = false;
    }
    if (!ractor_homology_involutions(h)) {
      std::cerr << "p=" << pp << ": a generator does not act as an involution\n";
      ok = false;
    }
    if (method == RACTOR_METHOD_BOTH) {
      const bool agree = ractor_homology_agree(h);
      compare << pp << ',' << ractor_homology_betti(h, RACTOR_METHOD_RS) << ','
              << factors(h, RACTOR_METHOD_RS) << ',' << ractor_homology_betti(h, RACTOR_METHOD_CELLS) << ','
              << factors(h, RACTOR_METHOD_CELLS) << ',' << (agree ? "true" : "false") << '\n';
      if (!agree) {
        std::cerr << "p=" << pp << ": methods disagree\n";
        ok = false;
      }
    }
  }
  write_output(cfg.out, csv.str());
  if (method == RACTOR_METHOD_BOTH) {
    if (cfg.out.empty() || cfg.out == "-") {
      std::cerr << compare.str();
    } else {
      std::filesystem::path log(cfg.out);
      log.replace_extension(".compare.csv");
      write_output(log.string(), compare.str());
    }
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion growth in cyclic covers of right-angled polytope manifolds"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--polytope", cfg.polytope, "JSON path or builtin:<name>")->capture_default_str();
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  };
  auto* verify_cmd = app.add_subcommand("verify-base", "certify the base manifold and its walls");
  add_common(verify_cmd);
  verify_cmd->add_option("--coloring", cfg.coloring, "colouring JSON path or auto")->capture_default_str();

  auto* growth_cmd = app.add_subcommand("growth", "homology of the cyclic covers for p = 1..max-p");
  add_common(growth_cmd);
  growth_cmd->add_option("--coloring", cfg.coloring, "colouring JSON path or auto")->capture_default_str();
  growth_cmd->add_option("--max-p", cfg.max_p, "largest cover degree")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  growth_cmd->add_option("--method", cfg.method, "rs, cells or both")
      ->check(CLI::IsMember({"rs", "cells", "both"}))
      ->capture_default_str();
  growth_cmd->add_option("--threads", cfg.threads, "worker threads")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();

  auto* search_cmd = app.add_subcommand("color-search", "find an admissible colouring");
  add_common(search_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*verify_cmd) return cmd_verify_base(cfg);
    if (*growth_cmd) return cmd_growth(cfg);
    return cmd_color_search(cfg);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
