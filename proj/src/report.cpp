#include "svcoh/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace svcoh {

using ordered_json = nlohmann::ordered_json;

std::vector<Params> parse_grid(std::istream& in) {
  std::vector<Params> grid;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string lam, mu, extra;
    if (!(fields >> lam)) continue;
    if (!(fields >> mu) || (fields >> extra))
      throw GridParseError("grid line " + std::to_string(lineno) + ": expected 'lambda mu'");
    try {
      grid.emplace_back(parse_rational(lam), parse_rational(mu));
    } catch (const RationalParseError& e) {
      throw GridParseError("grid line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return grid;
}

namespace {

ordered_json to_json(const H2Report& r) {
  ordered_json j;
  j["lambda"] = to_fraction_string(r.params.lambda);
  j["mu"] = to_fraction_string(r.params.mu);
  j["mu_class"] = to_string(r.params.mu_class);
  j["N"] = r.outer_window;
  j["M"] = r.inner_window;
  j["cocycle_dim"] = r.cocycle_dim;
  j["coboundary_dim"] = r.coboundary_dim;
  j["h2_dim"] = r.h2_dim;
  j["expected_dim"] = r.expected_dim;
  j["stabilized"] = r.stabilized;
  j["generators"] = ordered_json::array();
  for (const auto& g : r.matched)
    j["generators"].push_back({{"id", to_string(g.id)}, {"matched", g.matched}});
  return j;
}

H2Report from_json(const ordered_json& j) {
  H2Report r;
  r.params = Params(parse_rational(j.at("lambda").get<std::string>()),
                    parse_rational(j.at("mu").get<std::string>()));
  r.outer_window = j.at("N").get<int>();
  r.inner_window = j.at("M").get<int>();
  r.cocycle_dim = j.at("cocycle_dim").get<std::size_t>();
  r.coboundary_dim = j.at("coboundary_dim").get<std::size_t>();
  r.h2_dim = j.at("h2_dim").get<std::size_t>();
  r.expected_dim = j.at("expected_dim").get<int>();
  r.stabilized = j.at("stabilized").get<bool>();
  for (const auto& g : j.at("generators")) {
    auto id = parse_known_cocycle(g.at("id").get<std::string>());
    if (!id) throw std::invalid_argument("unknown generator id " + g.at("id").dump());
    r.matched.push_back({*id, g.at("matched").get<bool>()});
  }
  return r;
}

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

std::string csv_row(const H2Report& r) {
  std::ostringstream os;
  os << to_string(r.params.lambda) << ',' << to_string(r.params.mu) << ',' << r.outer_window
     << ',' << r.inner_window << ',' << r.h2_dim << ',' << r.expected_dim << ','
     << (r.agrees() ? "true" : "false") << '\n';
  return os.str();
}

constexpr const char* kCsvHeader = "lambda,mu,N,M,h2_dim,expected_dim,agree\n";

std::string table(const std::vector<H2Report>& reports) {
  std::ostringstream os;
  auto row = [&os](const std::string& lam, const std::string& mu, const std::string& n,
                   const std::string& m, const std::string& z, const std::string& b,
                   const std::string& h, const std::string& e, const std::string& s,
                   const std::string& a) {
    os << std::left << std::setw(8) << lam << std::setw(8) << mu << std::right << std::setw(4)
       << n << std::setw(4) << m << std::setw(8) << z << std::setw(8) << b << std::setw(5) << h
       << std::setw(6) << e << "  " << std::left << std::setw(7) << s << a << '\n';
  };
  row("lambda", "mu", "N", "M", "cocyc", "cobdy", "h2", "exp", "stable", "agree");
  for (const auto& r : reports)
    row(to_string(r.params.lambda), to_string(r.params.mu), std::to_string(r.outer_window),
        std::to_string(r.inner_window), std::to_string(r.cocycle_dim),
        std::to_string(r.coboundary_dim), std::to_string(r.h2_dim),
        std::to_string(r.expected_dim), r.stabilized ? "yes" : "no", mark(r.agrees()));
  return os.str();
}

}  // namespace

std::string emit(const H2Report& r, Format format) {
  switch (format) {
    case Format::Json: return to_json(r).dump(2) + "\n";
    case Format::Csv: return kCsvHeader + csv_row(r);
    case Format::Table: {
      std::ostringstream os;
      os << "lambda = " << to_string(r.params.lambda) << ", mu = " << to_string(r.params.mu)
         << " (" << to_string(r.params.mu_class) << ")\n"
         << "window N = " << r.outer_window << ", inner M = " << r.inner_window << '\n'
         << "cocycle dim     " << r.cocycle_dim << '\n'
         << "coboundary dim  " << r.coboundary_dim << '\n'
         << "H^2 dim         " << r.h2_dim << "  (expected " << r.expected_dim << ") "
         << mark(r.agrees()) << '\n'
         << "stabilized      " << (r.stabilized ? "yes" : "no") << '\n';
      for (const auto& g : r.matched)
        os << "  " << std::left << std::setw(16) << to_string(g.id) << mark(g.matched) << '\n';
      return os.str();
    }
  }
  return {};
}

std::string emit(const std::vector<H2Report>& reports, Format format) {
  switch (format) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      return arr.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string s = kCsvHeader;
      for (const auto& r : reports) s += csv_row(r);
      return s;
    }
    case Format::Table: return table(reports);
  }
  return {};
}

H2Report parse_report_json(const std::string& text) {
  return from_json(ordered_json::parse(text));
}

namespace {

bool all_matched(const H2Report& r) {
  for (const auto& g : r.matched)
    if (!g.matched) return false;
  return true;
}

int run_verify_known(const CliConfig& c, std::ostream& out) {
  bool ok = true;
  ordered_json arr = ordered_json::array();
  std::ostringstream text;
  text << "known cocycles at lambda = " << to_string(c.params.lambda)
       << ", mu = " << to_string(c.params.mu) << ", window N = " << c.window << '\n';
  for (auto id : kAllKnownCocycles) {
    if (!regime_valid(id, c.params)) continue;
    const auto chk = verify_known(id, c.params, c.window);
    ok = ok && chk.passes();
    arr.push_back({{"id", to_string(id)},
                   {"triples", chk.triples_checked},
                   {"nonzero_defects", chk.nonzero_defects},
                   {"nontrivial", chk.nontrivial}});
    text << "  " << std::left << std::setw(16) << to_string(id) << "triples " << std::setw(7)
         << chk.triples_checked << " nonzero defects " << std::setw(4) << chk.nonzero_defects
         << " nontrivial " << (chk.nontrivial ? "yes" : "no") << "  " << mark(chk.passes())
         << '\n';
  }
  out << (c.format == Format::Json ? arr.dump(2) + "\n" : text.str());
  return ok ? kExitAgree : kExitDisagree;
}

int run_jacobi_check(const CliConfig& c, std::ostream& out) {
  const auto w = enumerate_window(c.window);
  std::size_t triples = 0, failures = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      for (std::size_t k = j + 1; k < w.size(); ++k) {
        ++triples;
        if (!jacobi_defect(w[i], w[j], w[k], c.params).is_zero()) ++failures;
      }
  if (c.format == Format::Json) {
    ordered_json j{{"lambda", to_fraction_string(c.params.lambda)},
                   {"mu", to_fraction_string(c.params.mu)},
                   {"N", c.window},
                   {"triples", triples},
                   {"failures", failures}};
    out << j.dump(2) << '\n';
  } else {
    out << "jacobi identity over " << triples << " triples (N = " << c.window
        << "): " << failures << " failures " << mark(failures == 0) << '\n';
  }
  return failures == 0 ? kExitAgree : kExitDisagree;
}

}  // namespace

int run(const CliConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.subcommand) {
      case Subcommand::Solve: {
        const auto r = solve_h2(c.params, c.window, c.inner);
        out << emit(r, c.format);
        return r.agrees() && all_matched(r) ? kExitAgree : kExitDisagree;
      }
      case Subcommand::Sweep: {
        if (!c.grid_path) {
          err << "sweep: --grid is required\n";
          return kExitUsage;
        }
        std::ifstream in(*c.grid_path);
        if (!in) {
          err << "--grid: cannot open " << *c.grid_path << '\n';
          return kExitUsage;
        }
        std::vector<Params> grid;
        try {
          grid = parse_grid(in);
        } catch (const GridParseError& e) {
          err << "--grid: " << e.what() << '\n';
          return kExitUsage;
        }
        const auto reports = sweep(grid, c.window, c.inner);
        out << emit(reports, c.format);
        bool ok = true;
        for (const auto& r : reports) ok = ok && r.agrees() && all_matched(r);
        return ok ? kExitAgree : kExitDisagree;
      }
      case Subcommand::VerifyKnown: return run_verify_known(c, out);
      case Subcommand::JacobiCheck: return run_jacobi_check(c, out);
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Second cohomology of deformed Schrodinger-Virasoro algebras"};
  app.require_subcommand(1);

  struct Options {
    std::string lambda, mu;
    int window = 10;
    int inner = 6;
    std::string format = "table";
    std::string grid;
  };
  Options solve_opts, sweep_opts, verify_opts, jacobi_opts;
  verify_opts.window = 20;
  jacobi_opts.window = 6;
  const std::map<std::string, Format> formats{
      {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto add_params = [](CLI::App* sub, Options& o) {
    sub->add_option("--lambda", o.lambda, "lambda as p/q")->required();
    sub->add_option("--mu", o.mu, "mu as p/q")->required();
  };
  auto add_common = [](CLI::App* sub, Options& o, bool with_inner) {
    sub->add_option("--window", o.window, "outer window N")->capture_default_str();
    if (with_inner) sub->add_option("--inner", o.inner, "inner window M")->capture_default_str();
    sub->add_option("--format", o.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "compute H^2 for one (lambda, mu)");
  add_params(solve, solve_opts);
  add_common(solve, solve_opts, true);

  auto* sweep_cmd = app.add_subcommand("sweep", "compute H^2 over a grid file");
  sweep_cmd->add_option("--grid", sweep_opts.grid, "file with one 'lambda mu' per line")
      ->required();
  add_common(sweep_cmd, sweep_opts, true);

  auto* verify = app.add_subcommand("verify-known", "check the explicit generators");
  add_params(verify, verify_opts);
  add_common(verify, verify_opts, false);

  auto* jacobi = app.add_subcommand("jacobi-check", "exhaustive Jacobi identity on a window");
  add_params(jacobi, jacobi_opts);
  add_common(jacobi, jacobi_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitAgree;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  CliConfig c;
  const Options* o = &solve_opts;
  if (sweep_cmd->parsed()) {
    c.subcommand = Subcommand::Sweep;
    o = &sweep_opts;
  } else if (verify->parsed()) {
    c.subcommand = Subcommand::VerifyKnown;
    o = &verify_opts;
  } else if (jacobi->parsed()) {
    c.subcommand = Subcommand::JacobiCheck;
    o = &jacobi_opts;
  }
  c.window = o->window;
  c.inner = o->inner;
  c.format = formats.at(o->format);
  if (!o->grid.empty()) c.grid_path = o->grid;

  if (c.subcommand != Subcommand::Sweep) {
    try {
      c.params = Params(parse_rational(o->lambda), Rational(0));
    } catch (const RationalParseError& e) {
      err << "--lambda: " << e.what() << '\n';
      return kExitUsage;
    }
    try {
      c.params = Params(c.params.lambda, parse_rational(o->mu));
    } catch (const RationalParseError& e) {
      err << "--mu: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  if (c.window < 1) {
    err << "--window: must be at least 1\n";
    return kExitUsage;
  }
  if (c.subcommand == Subcommand::Solve || c.subcommand == Subcommand::Sweep) {
    if (c.inner < 2) {
      err << "--inner: must be at least 2\n";
      return kExitUsage;
    }
    if (c.window < c.inner + 2) {
      err << "--window: must be at least --inner + 2\n";
      return kExitUsage;
    }
  }
  return run(c, out, err);
}

}  // namespace svcoh
