#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "starspline/bounds.hpp"
#include "starspline/combinatorics.hpp"
#include "starspline/error.hpp"
#include "starspline/fatpoints.hpp"
#include "starspline/splinedim.hpp"
#include "starspline/star_io.hpp"
#include "starspline/starmesh.hpp"

using namespace starspline;
using cli::Range;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct RunConfig {
  std::string catalog_name;
  std::string star_file;
  std::string r_text = "1";
  std::string d_text;
  std::uint64_t seed = 1;
  int trials = 3;
  std::string format = "table";
  std::string cache_path;
  std::string output_path;
  bool use_distinct = false;
  bool apply_max = false;
  bool exact_euler = true;
  bool exact = false;
  bool perturb = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

struct Source {
  VertexStar star;
  FrozenMask frozen;
};

Source load_source(const RunConfig& cfg) {
  if (cfg.catalog_name.empty() == cfg.star_file.empty())
    throw Error(Errc::InvalidInput, "give exactly one of --catalog and --star");
  Source src;
  if (!cfg.catalog_name.empty()) {
    src.star = catalog(cfg.catalog_name);
    src.frozen = catalog_frozen_mask(cfg.catalog_name);
  } else {
    src.star = read_star_file(cfg.star_file);
  }
  if (cfg.perturb)
    src.star = perturb_with_retry(src.star, cfg.seed, GenericOptions{}.denominator_scale, src.frozen).first;
  return src;
}

std::string cache_path(const RunConfig& cfg) {
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* env = std::getenv("STARSPLINE_CACHE")) return env;
  return {};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  out << text;
  if (!out) throw Error(Errc::InvalidInput, "cannot write " + cfg.output_path);
}

std::string render(const RunConfig& cfg, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  if (cfg.format == "csv") return cli::format_csv(header, rows);
  return cli::format_table(header, rows);
}

struct Cell {
  int r = 0;
  int d = 0;
};

std::vector<Cell> grid(const Range& rs, const std::string& d_text) {
  std::vector<Cell> cells;
  const Range ds = cli::parse_range(d_text.empty() ? "0..3" : d_text);
  for (int r = rs.lo; r <= rs.hi; ++r)
    for (int d = ds.lo; d <= ds.hi; ++d) cells.push_back({r, d});
  return cells;
}

// Generic dimension of one cell, through the cache when one is configured.
struct GenericCell {
  std::size_t value = 0;
  std::string state;
};

std::string generic_key(const Source& src, const Cell& c, const RunConfig& cfg, bool exact) {
  std::ostringstream text;
  text << format_star(src.star) << "r " << c.r << "\nd " << c.d << '\n';
  if (exact) {
    text << "mode exact\n";
  } else {
    text << "mode generic\nseed " << cfg.seed << "\ntrials " << cfg.trials << "\nscale "
         << GenericOptions{}.denominator_scale << "\nfrozen";
    for (const auto& m : src.frozen) text << ' ' << m[0] << m[1] << m[2];
    text << '\n';
  }
  return cli::hex64(cli::fnv1a64(text.str()));
}

std::vector<GenericCell> generic_cells(const Source& src, const std::vector<Cell>& cells,
                                       const RunConfig& cfg, bool exact) {
  cli::ResultCache cache(cache_path(cfg));
  std::vector<GenericCell> out(cells.size());
  std::vector<std::string> keys(cells.size());
  std::vector<bool> cached(cells.size(), false);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    keys[i] = generic_key(src, cells[i], cfg, exact);
    if (auto hit = cache.get(keys[i])) {
      std::istringstream in(*hit);
      if (!(in >> out[i].value >> out[i].state))
        throw Error(Errc::ParseError, "malformed cache value for " + keys[i]);
      cached[i] = true;
    }
  }
  cli::parallel_for(cells.size(), cfg.jobs, [&](std::size_t i) {
    if (cached[i]) return;
    const Cell& c = cells[i];
    if (exact) {
      out[i] = {homog_dim(src.star, c.r, c.d), "exact"};
      return;
    }
    GenericOptions opts;
    opts.frozen = src.frozen;
    const GenericDim g = generic_homog_dim(src.star, c.r, c.d, cfg.trials, cfg.seed, opts);
    out[i] = {g.value, to_string(g.state)};
  });
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!cached[i]) cache.put(keys[i], std::to_string(out[i].value) + ' ' + out[i].state);
  return out;
}

int cmd_dim(const RunConfig& cfg) {
  const Source src = load_source(cfg);
  const auto cells = grid(cli::parse_range(cfg.r_text), cfg.d_text);
  const auto dims = generic_cells(src, cells, cfg, cfg.exact);
  const bool closed = src.star.closed();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [r, d] = cells[i];
    const std::int64_t trivial = binom(d + 2, 2);
    std::int64_t lb = closed ? lbcs(src.star, r, d, cfg.use_distinct) : lbos(src.star, r, d);
    if (cfg.apply_max) lb = std::max(lb, trivial);
    const std::int64_t best =
        closed ? homog_lower_bound(src.star, r, d).best_lower : std::max(trivial, lbos(src.star, r, d));
    rows.push_back({std::to_string(r), std::to_string(d), std::to_string(trivial), std::to_string(lb),
                    std::to_string(euler_char_J(src.star, r, d, cfg.exact_euler)), std::to_string(best),
                    std::to_string(dims[i].value), dims[i].state});
  }
  emit(cfg, render(cfg, {"r", "d", "binom", closed ? "lbcs" : "lbos", "chi", "best_lower",
                         cfg.exact ? "dim" : "gendim", "state"},
                   rows));
  return 0;
}

struct Preset {
  std::string catalog_name;
  bool distinct = false;
  std::vector<Cell> cells;
};

std::vector<Cell> blocks(const std::vector<std::pair<int, Range>>& spec) {
  std::vector<Cell> cells;
  for (const auto& [r, ds] : spec)
    for (int d = ds.lo; d <= ds.hi; ++d) cells.push_back({r, d});
  return cells;
}

Preset preset(const std::string& name) {
  const auto bipyramid = blocks({{1, {2, 9}}, {2, {3, 11}}, {3, {4, 12}}, {4, {5, 13}}});
  if (name == "table1") return {"pentagonal-bipyramid", false, bipyramid};
  if (name == "table1-planar") return {"pentagonal-bipyramid-planar-base", true, bipyramid};
  if (name == "table2")
    return {"cube-barycentric", false, blocks({{1, {2, 9}}, {2, {3, 11}}, {3, {5, 15}}})};
  throw Error(Errc::UnknownName, "unknown preset '" + name + "' (table1, table1-planar, table2)");
}

int cmd_table(RunConfig cfg, const std::string& preset_name) {
  std::vector<Cell> cells;
  if (!preset_name.empty()) {
    const Preset p = preset(preset_name);
    if (!cfg.star_file.empty() || !cfg.catalog_name.empty())
      throw Error(Errc::InvalidInput, "--preset cannot be combined with --catalog or --star");
    cfg.catalog_name = p.catalog_name;
    cfg.use_distinct = p.distinct;
    cells = p.cells;
  } else {
    cells = grid(cli::parse_range(cfg.r_text), cfg.d_text);
  }
  const Source src = load_source(cfg);
  if (!src.star.closed()) throw Error(Errc::NotClosed, "tables need a closed star");
  const auto dims = generic_cells(src, cells, cfg, false);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [r, d] = cells[i];
    const std::int64_t first =
        cfg.use_distinct ? binom(d + 2, 2) + binom(d + 1 - r, 2) : binom(d + 2, 2);
    rows.push_back({std::to_string(r), std::to_string(d), std::to_string(first),
                    std::to_string(lbcs(src.star, r, d, cfg.use_distinct)), std::to_string(dims[i].value)});
  }
  const std::vector<std::string> header =
      cfg.use_distinct ? std::vector<std::string>{"r", "d", "f", "lbcs1", "symdim"}
                       : std::vector<std::string>{"r", "d", "binom", "lbcs", "gendim"};
  emit(cfg, render(cfg, header, rows));
  return 0;
}

int cmd_dual(const RunConfig& cfg) {
  const Source src = load_source(cfg);
  emit(cfg, format_config(dual_config(src.star)));
  return 0;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

int cmd_reduce(const RunConfig& cfg, int m, const std::string& lines_text) {
  if (m < 0) throw Error(Errc::InvalidInput, "--m must be non-negative");
  const Source src = load_source(cfg);
  const FatPointConfig config = dual_config(src.star);
  std::vector<std::size_t> sequence;
  if (!lines_text.empty()) {
    sequence = cli::parse_index_list(lines_text);
  } else {
    for (int k = 0; k < (m + 1) / 2; ++k)
      for (std::size_t l = 0; l < config.lines.size(); ++l) sequence.push_back(l);
  }
  const ReductionVector rv = reduce(config, std::vector<std::int64_t>(config.points.size(), m), sequence);
  std::ostringstream out;
  out << "sequence";
  for (std::size_t l : rv.line_sequence) out << ' ' << l;
  out << "\nvector (" << join(rv.entries, ",") << ")\nresiduals " << join(rv.residuals, " ") << '\n';
  out << "full " << (is_full(rv) ? "yes" : "no") << '\n';
  if (is_full(rv)) {
    const bool positive =
        std::all_of(rv.entries.begin(), rv.entries.end(), [](std::int64_t e) { return e > 0; });
    if (positive) {
      const auto [lo, hi] = alpha_bound(rv);
      out << "alpha_bound " << lo << ' ' << hi << '\n';
    }
    const Range ds = cli::parse_range(
        cfg.d_text.empty() ? "0.." + std::to_string(rv.entries.size() + 2) : cfg.d_text);
    for (int d = ds.lo; d <= ds.hi; ++d) {
      const auto [lo, hi] = cht_dim_bounds(rv, d);
      out << "cht " << d << ' ' << lo << ' ' << hi << '\n';
    }
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_waldschmidt(const RunConfig& cfg, int s_max) {
  const Source src = load_source(cfg);
  const FatPointConfig config = dual_config(src.star);
  std::ostringstream out;
  std::string lower = "none";
  try {
    lower = format_rational(waldschmidt_lower(config));
  } catch (const Error& e) {
    if (e.code() != Errc::ConfigNotRegular) throw;
  }
  out << "lower_bound " << lower << '\n';
  const auto estimates = waldschmidt_estimate(config, s_max);
  for (int s = 1; s <= s_max; ++s) {
    const Rational& q = estimates[static_cast<std::size_t>(s - 1)];
    out << "alpha " << s << ' ' << mp::numerator(q * s) << ' ' << format_rational(q) << '\n';
  }
  const std::int64_t alpha1 = static_cast<std::int64_t>(mp::numerator(estimates.front()));
  out << "chudnovsky " << format_rational(chudnovsky_lower(alpha1)) << '\n';
  emit(cfg, out.str());
  return 0;
}

struct Expectation {
  int r = 0;
  int d = 0;
  std::int64_t dim = 0;
};

std::vector<Expectation> read_expectations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot read " + path);
  std::vector<Expectation> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    Expectation e;
    if (!(fields >> e.r)) continue;
    std::string rest;
    if (!(fields >> e.d >> e.dim) || (fields >> rest))
      throw Error(Errc::ParseError, path + ":" + std::to_string(number) + ": expected 'r d dim'");
    out.push_back(e);
  }
  return out;
}

int cmd_check(const RunConfig& cfg, const std::string& expect_path) {
  const Source src = load_source(cfg);
  if (!src.star.closed()) throw Error(Errc::NotClosed, "check needs a closed star");
  const Range rs = cli::parse_range(cfg.r_text);
  std::ostringstream out;
  auto fail = [&](const std::string& line) {
    out << line << '\n';
    emit(cfg, out.str());
    return kExitViolation;
  };
  for (int r = rs.lo; r <= rs.hi; ++r) {
    const bool ok = whiteley_check(src.star, r);
    const std::string line = "whiteley r=" + std::to_string(r) + (ok ? " ok" : " FAIL");
    if (!ok) return fail(line);
    out << line << '\n';
  }
  std::vector<Cell> cells;
  for (int r = rs.lo; r <= rs.hi; ++r) {
    const Range ds = cfg.d_text.empty() ? Range{0, 3 * r + 3} : cli::parse_range(cfg.d_text);
    for (int d = ds.lo; d <= ds.hi; ++d) cells.push_back({r, d});
  }
  std::vector<std::int64_t> dims(cells.size());
  cli::parallel_for(cells.size(), cfg.jobs, [&](std::size_t i) {
    dims[i] = static_cast<std::int64_t>(homog_dim(src.star, cells[i].r, cells[i].d));
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [r, d] = cells[i];
    const std::int64_t lower = homog_lower_bound(src.star, r, d).best_lower;
    const std::string line = "bound r=" + std::to_string(r) + " d=" + std::to_string(d) + " lower " +
                             std::to_string(lower) + " dim " + std::to_string(dims[i]);
    if (lower > dims[i]) return fail(line + " FAIL");
    out << line << " ok\n";
  }
  if (!expect_path.empty()) {
    for (const auto& e : read_expectations(expect_path)) {
      const auto got = static_cast<std::int64_t>(homog_dim(src.star, e.r, e.d));
      const std::string line = "expect r=" + std::to_string(e.r) + " d=" + std::to_string(e.d) +
                               " want " + std::to_string(e.dim) + " got " + std::to_string(got);
      if (got != e.dim) return fail(line + " FAIL");
      out << line << " ok\n";
    }
  }
  emit(cfg, out.str());
  return 0;
}

void add_source(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--catalog", cfg.catalog_name, "named example star");
  cmd->add_option("--star", cfg.star_file, "star description file");
  cmd->add_option("--seed", cfg.seed, "perturbation seed")->capture_default_str();
  cmd->add_flag("--perturb", cfg.perturb, "perturb the star with --seed before use");
  cmd->add_option("-o,--output", cfg.output_path, "write the report to a file");
}

void add_grid(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--r", cfg.r_text, "smoothness range, e.g. 1..3")->capture_default_str();
  cmd->add_option("--d", cfg.d_text, "degree range, e.g. 2..9");
  cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

void add_generic(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--trials", cfg.trials, "perturbation trials per cell")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  cmd->add_option("--cache", cfg.cache_path, "result cache file (default: $STARSPLINE_CACHE)");
  cmd->add_flag("--distinct", cfg.use_distinct, "count distinct planes around each edge");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions and lower bounds for splines on vertex stars"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* dim = app.add_subcommand("dim", "bounds and dimensions over an (r, d) grid");
  add_source(dim, cfg);
  add_grid(dim, cfg);
  add_generic(dim, cfg);
  dim->add_flag("--apply-max", cfg.apply_max, "report max(C(d+2,2), lbcs)");
  dim->add_flag("!--formula-euler", cfg.exact_euler, "use the closed-form Euler characteristic");
  dim->add_flag("--exact", cfg.exact, "exact dimension of the star as given");

  std::string preset_name;
  auto* table = app.add_subcommand("table", "CSV tables of lbcs against generic dimensions");
  add_source(table, cfg);
  add_grid(table, cfg);
  add_generic(table, cfg);
  table->add_option("--preset", preset_name, "table1, table1-planar or table2");

  auto* dual = app.add_subcommand("dual", "dual points and lines of a closed star");
  add_source(dual, cfg);

  int m = 2;
  std::string lines_text;
  auto* red = app.add_subcommand("reduce", "reduction vector on the dual configuration");
  add_source(red, cfg);
  red->add_option("--m", m, "uniform multiplicity")->capture_default_str();
  red->add_option("--lines", lines_text, "line sequence, e.g. 1,0,2");
  red->add_option("--d", cfg.d_text, "degrees for the dimension bounds");

  int s_max = 3;
  auto* wald = app.add_subcommand("waldschmidt", "Waldschmidt lower bound and symbolic power estimates");
  add_source(wald, cfg);
  wald->add_option("--smax", s_max, "largest symbolic power")->capture_default_str()->check(CLI::PositiveNumber);

  std::string expect_path;
  auto* check = app.add_subcommand("check", "low-degree and lower-bound checks; exit 1 on violation");
  add_source(check, cfg);
  add_grid(check, cfg);
  check->add_option("--expect", expect_path, "file of 'r d dim' lines to compare against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*dim) return cmd_dim(cfg);
    if (*table) {
      if (!table->count("--format")) cfg.format = "csv";
      return cmd_table(cfg, preset_name);
    }
    if (*dual) return cmd_dual(cfg);
    if (*red) return cmd_reduce(cfg, m, lines_text);
    if (*wald) return cmd_waldschmidt(cfg, s_max);
    if (*check) return cmd_check(cfg, expect_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
