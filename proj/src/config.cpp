#include "homcount/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace homcount {

std::string task_name(TaskKind k) {
  switch (k) {
    case TaskKind::census_sft: return "census-sft";
    case TaskKind::census_smooth: return "census-smooth";
    case TaskKind::periodic: return "periodic";
    case TaskKind::prime_orbits: return "prime-orbits";
    case TaskKind::entropy: return "entropy";
    case TaskKind::verify: return "verify";
  }
  return "?";
}

namespace {

const std::vector<std::string> kKnownKeys = {
    "task",    "graph",        "graph_file", "system",       "pbar",
    "point",   "n_max",        "eps",        "delta",        "budget",
    "seed",    "threads",      "window",     "n_range",      "sample",
    "sample_count", "out_csv", "out_json",   "geometry_dump"};

int edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<int>> d(a.size() + 1,
                                  std::vector<int>(b.size() + 1, 0));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0)});
  return d[a.size()][b.size()];
}

std::string suggest_key(const std::string& key) {
  int best = 1 << 20;
  std::string who;
  for (const auto& k : kKnownKeys) {
    int d = edit_distance(key, k);
    if (d < best) {
      best = d;
      who = k;
    }
  }
  return best <= 3 ? who : "";
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

System parse_system(int line, const std::string& spec) {
  auto fail = [&](const std::string& msg) -> System {
    throw ConfigError(line, "system", msg);
  };
  std::string s = trim(spec);
  if (s == "cat_map") return TorusAutomorphism::cat_map();
  auto paren = s.find('(');
  if (paren == std::string::npos || s.back() != ')')
    return fail("expected cat_map | toral(a,b,c,d) | horseshoe(kappa,mu) | "
                "henon(a,b)");
  std::string name = trim(s.substr(0, paren));
  std::string args = s.substr(paren + 1, s.size() - paren - 2);
  std::replace(args.begin(), args.end(), ',', ' ');
  std::istringstream as(args);
  if (name == "toral") {
    long a, b, c, d;
    if (!(as >> a >> b >> c >> d)) return fail("toral needs four integers");
    try {
      return TorusAutomorphism({{{a, b}, {c, d}}});
    } catch (const std::exception& e) {
      return fail(e.what());
    }
  }
  if (name == "horseshoe") {
    double kappa, mu;
    if (!(as >> kappa >> mu)) return fail("horseshoe needs kappa and mu");
    try {
      return AffineHorseshoe(Rational(kappa), Rational(mu));
    } catch (const std::exception& e) {
      return fail(e.what());
    }
  }
  if (name == "henon") {
    double a, b;
    if (!(as >> a >> b)) return fail("henon needs a and b");
    try {
      return HenonMap(Rational(a), Rational(b));
    } catch (const std::exception& e) {
      return fail(e.what());
    }
  }
  return fail("unknown system '" + name + "'");
}

} // namespace

TaskConfig parse_config(const std::string& document) {
  TaskConfig cfg;
  std::istringstream in(document);
  std::string line;
  int lineno = 0;
  bool task_seen = false;
  std::map<std::string, int> where; // key -> line, for later range errors
  std::vector<std::string> graph_lines;
  bool in_graph_block = false;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    if (in_graph_block) {
      if (t == "}") {
        in_graph_block = false;
        std::string text;
        for (const auto& gl : graph_lines) text += gl + "\n";
        try {
          cfg.graph = parse_graph(text);
        } catch (const std::exception& e) {
          throw ConfigError(lineno, "graph", e.what());
        }
      } else {
        graph_lines.push_back(t);
      }
      continue;
    }
    if (t == "graph {") {
      in_graph_block = true;
      graph_lines.clear();
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(lineno, "line", "expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    where[key] = lineno;
    cfg.echo[key] = val;

    auto want_num = [&](const char* field) -> double {
      std::istringstream vs(val);
      double x;
      if (!(vs >> x)) throw ConfigError(lineno, field, "expected a number");
      return x;
    };

    if (key == "task") {
      task_seen = true;
      if (val == "census-sft") cfg.task = TaskKind::census_sft;
      else if (val == "census-smooth") cfg.task = TaskKind::census_smooth;
      else if (val == "periodic") cfg.task = TaskKind::periodic;
      else if (val == "prime-orbits") cfg.task = TaskKind::prime_orbits;
      else if (val == "entropy") cfg.task = TaskKind::entropy;
      else if (val == "verify") cfg.task = TaskKind::verify;
      else throw ConfigError(lineno, "task", "unknown task '" + val + "'");
    } else if (key == "graph" || key == "graph_file") {
      std::ifstream gf(val);
      if (!gf) throw ConfigError(lineno, "graph", "cannot open '" + val + "'");
      std::stringstream buf;
      buf << gf.rdbuf();
      try {
        cfg.graph = parse_graph(buf.str());
      } catch (const std::exception& e) {
        throw ConfigError(lineno, "graph", e.what());
      }
    } else if (key == "system") {
      cfg.system = parse_system(lineno, val);
    } else if (key == "pbar") {
      std::istringstream vs(val);
      cfg.pbar_word.clear();
      int v;
      while (vs >> v) cfg.pbar_word.push_back(v);
      if (cfg.pbar_word.empty())
        throw ConfigError(lineno, "pbar", "expected vertex indices");
    } else if (key == "point") {
      std::istringstream vs(val);
      if (!(vs >> cfg.point_x >> cfg.point_y))
        throw ConfigError(lineno, "point", "expected two coordinates");
    } else if (key == "n_max") {
      cfg.n_max = static_cast<int>(want_num("n_max"));
      if (cfg.n_max < 1 || cfg.n_max > 1000000)
        throw ConfigError(lineno, "n_max", "must lie in [1, 1000000]");
    } else if (key == "eps") {
      cfg.eps = want_num("eps");
      if (!(cfg.eps > 0))
        throw ConfigError(lineno, "eps", "must be positive");
    } else if (key == "delta") {
      cfg.delta = want_num("delta");
      if (!(cfg.delta > 0 && cfg.delta < 1))
        throw ConfigError(lineno, "delta", "must lie in (0,1)");
    } else if (key == "budget") {
      cfg.budget = static_cast<long long>(want_num("budget"));
      if (cfg.budget < 1)
        throw ConfigError(lineno, "budget", "must be positive");
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(want_num("seed"));
    } else if (key == "threads") {
      cfg.threads = static_cast<int>(want_num("threads"));
      if (cfg.threads < 1 || cfg.threads > 256)
        throw ConfigError(lineno, "threads", "must lie in [1, 256]");
    } else if (key == "window") {
      std::istringstream vs(val);
      if (!(vs >> cfg.window_lo >> cfg.window_hi) ||
          cfg.window_lo > cfg.window_hi)
        throw ConfigError(lineno, "window", "expected lo hi with lo <= hi");
    } else if (key == "n_range") {
      std::istringstream vs(val);
      cfg.n_range.clear();
      int v;
      while (vs >> v) cfg.n_range.push_back(v);
      if (cfg.n_range.size() < 4)
        throw ConfigError(lineno, "n_range", "needs at least 4 values");
    } else if (key == "sample") {
      if (val != "bernoulli" && val != "lebesgue")
        throw ConfigError(lineno, "sample", "expected bernoulli | lebesgue");
      cfg.sample_law = val;
    } else if (key == "sample_count") {
      cfg.sample_count = static_cast<int>(want_num("sample_count"));
      if (cfg.sample_count < 1)
        throw ConfigError(lineno, "sample_count", "must be positive");
    } else if (key == "out_csv") {
      cfg.out_csv = val;
    } else if (key == "out_json") {
      cfg.out_json = val;
    } else if (key == "geometry_dump") {
      cfg.geometry_dump = val;
    } else {
      std::string hint = suggest_key(key);
      throw ConfigError(lineno, key,
                        "unknown key" +
                            (hint.empty() ? "" : ", did you mean '" + hint +
                                                     "'?"));
    }
  }
  if (in_graph_block)
    throw ConfigError(lineno, "graph", "unterminated graph { block");
  if (!task_seen) throw ConfigError(0, "task", "missing required key 'task'");

  // cross-field validation
  const bool needs_graph =
      cfg.task == TaskKind::census_sft || cfg.task == TaskKind::prime_orbits;
  const bool needs_system = cfg.task == TaskKind::census_smooth ||
                            cfg.task == TaskKind::periodic ||
                            cfg.task == TaskKind::entropy;
  if (needs_graph && !cfg.graph)
    throw ConfigError(0, "graph", "this task requires a graph");
  if (needs_system && !cfg.system)
    throw ConfigError(0, "system", "this task requires a system");
  if (cfg.system) {
    double bound = 0;
    if (std::holds_alternative<TorusAutomorphism>(*cfg.system)) bound = 0.25;
    if (auto* h = std::get_if<AffineHorseshoe>(&*cfg.system))
      bound = 1.0 - h->kappa().get_d();
    if (bound > 0 && cfg.eps > bound &&
        (cfg.task == TaskKind::census_smooth || cfg.task == TaskKind::entropy))
      throw ConfigError(where.count("eps") ? where["eps"] : 0, "eps",
                        "exceeds the safe bound " + std::to_string(bound) +
                            " for this system");
  }
  if (cfg.graph) {
    auto bad = validate_graph(*cfg.graph);
    if (!bad.empty())
      throw ConfigError(where.count("graph") ? where["graph"] : 0, "graph",
                        bad.front());
    for (int v : cfg.pbar_word)
      if (v < 0 || v >= cfg.graph->size())
        throw ConfigError(where.count("pbar") ? where["pbar"] : 0, "pbar",
                          "vertex index out of range");
  }
  if (cfg.window_lo < 0) {
    cfg.window_lo = std::max(1, cfg.n_max / 4);
    cfg.window_hi = cfg.n_max;
  }
  if (cfg.n_range.empty())
    for (int n = 6; n <= 14; ++n) cfg.n_range.push_back(n);
  if (cfg.sample_law.empty())
    cfg.sample_law = cfg.system && std::holds_alternative<AffineHorseshoe>(
                                       *cfg.system)
                         ? "bernoulli"
                         : "lebesgue";

  // defaults echoed back alongside the explicit keys
  cfg.echo["task"] = task_name(cfg.task);
  cfg.echo.emplace("n_max", std::to_string(cfg.n_max));
  cfg.echo.emplace("eps", std::to_string(cfg.eps));
  cfg.echo.emplace("delta", std::to_string(cfg.delta));
  cfg.echo.emplace("budget", std::to_string(cfg.budget));
  cfg.echo.emplace("seed", std::to_string(cfg.seed));
  cfg.echo.emplace("threads", std::to_string(cfg.threads));
  cfg.echo.emplace("window",
                   std::to_string(cfg.window_lo) + " " +
                       std::to_string(cfg.window_hi));
  cfg.echo.emplace("sample", cfg.sample_law);
  cfg.echo.emplace("sample_count", std::to_string(cfg.sample_count));
  return cfg;
}

} // namespace homcount
