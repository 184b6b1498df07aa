#include "lawson/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lawson/checks.hpp"
#include "lawson/dsl.hpp"
#include "lawson/errors.hpp"

namespace lawson::cli {

namespace {

OutputFormat format_from(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return OutputFormat::PlainTable;
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

void write_plain_grid(std::ostream& os, const EvaluationResult& result,
                      std::int64_t last_row) {
  const auto& table = result.table;
  const auto n = table.complex_dimension();
  std::size_t width = 1;
  for (const auto& [key, rank] : table.ranks()) width = std::max(width, rank.str().size());
  width = std::max(width, std::to_string(2 * n).size());

  auto cell = [&](const std::string& s) {
    os << ' ' << std::string(width - std::min(width, s.size()), ' ') << s;
  };
  os << "expr: " << result.expr_text << '\n';
  os << "dim: " << n << ", " << (table.proper() ? "proper" : "non-proper")
     << ", coefficients " << coefficient_symbol(table.coefficients()) << '\n';
  os << "r\\k";
  for (std::int64_t k = 0; k <= 2 * n; ++k) cell(std::to_string(k));
  os << '\n';
  for (std::int64_t r = 0; r <= last_row; ++r) {
    const auto label = std::to_string(r);
    os << label << std::string(3 - std::min<std::size_t>(3, label.size()), ' ');
    for (std::int64_t k = 0; k <= 2 * n; ++k) {
      if (k < 2 * r) {
        cell("");
      } else {
        const auto rank = rank_at(table, r, k);
        cell(rank == 0 ? "." : rank.str());
      }
    }
    os << '\n';
  }
}

}  // namespace

void write_table(std::ostream& os, const EvaluationResult& result, OutputFormat format,
                 std::optional<std::int64_t> max_r) {
  const auto& table = result.table;
  const std::int64_t last_row =
      max_r ? std::min(*max_r, table.complex_dimension()) : table.complex_dimension();
  switch (format) {
    case OutputFormat::PlainTable:
      write_plain_grid(os, result, last_row);
      break;
    case OutputFormat::Csv:
      os << "r,k,rank\n";
      for (const auto& [key, rank] : table.ranks()) {
        if (key.r > last_row) break;
        os << key.r << ',' << key.k << ',' << rank << '\n';
      }
      break;
    case OutputFormat::Json: {
      // hand-written so ranks of any size stay exact integers
      os << "{\"expr\":" << json_string(result.expr_text) << ",\"dim\":"
         << table.complex_dimension() << ",\"proper\":" << (table.proper() ? "true" : "false")
         << ",\"coefficients\":\"" << coefficient_symbol(table.coefficients())
         << "\",\"ranks\":[";
      bool first = true;
      for (const auto& [key, rank] : table.ranks()) {
        if (key.r > last_row) break;
        os << (first ? "" : ",") << "{\"r\":" << key.r << ",\"k\":" << key.k
           << ",\"rank\":" << rank << '}';
        first = false;
      }
      os << "]}\n";
      break;
    }
  }
}

void write_series(std::ostream& os, const TruncatedBiSeries& series, OutputFormat format) {
  switch (format) {
    case OutputFormat::PlainTable:
      for (std::int64_t d = 1; d <= series.max_t(); ++d) {
        os << "d=" << d << ':';
        for (const auto& c : series.t_row(d)) os << ' ' << c;
        os << '\n';
      }
      break;
    case OutputFormat::Csv:
      os << "d,k,coefficient\n";
      for (std::int64_t d = 1; d <= series.max_t(); ++d) {
        for (std::int64_t k = 0; k <= series.max_z(); ++k) {
          os << d << ',' << k << ',' << series.coefficient(k, d) << '\n';
        }
      }
      break;
    case OutputFormat::Json:
      os << "{\"max_k\":" << series.max_z() << ",\"max_d\":" << series.max_t() << ",\"rows\":[";
      for (std::int64_t d = 1; d <= series.max_t(); ++d) {
        os << (d > 1 ? "," : "") << "{\"d\":" << d << ",\"coefficients\":[";
        for (std::int64_t k = 0; k <= series.max_z(); ++k) {
          os << (k ? "," : "") << series.coefficient(k, d);
        }
        os << "]}";
      }
      os << "]}\n";
      break;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lawson homology calculator for compositional variety descriptions", "lawson"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"plain", "json", "csv"};

  std::string expr_text;
  std::string format_name = "plain";

  auto* eval = app.add_subcommand("eval", "Full bigraded table of ranks of L_rH_k");
  eval->add_option("EXPR", expr_text, "Variety expression")->required();
  eval->add_option("--format", format_name, "plain|json|csv")->check(CLI::IsMember(formats));
  std::int64_t max_r = -1;
  auto* max_r_opt = eval->add_option("--max-r", max_r, "Emit rows r <= R only")
                        ->check(CLI::NonNegativeNumber);

  auto* chi_cmd = app.add_subcommand("chi", "chi_p value or the full chi profile");
  chi_cmd->add_option("EXPR", expr_text, "Variety expression")->required();
  std::int64_t p = 0;
  auto* p_opt = chi_cmd->add_option("--p", p, "Cycle dimension p")->check(CLI::NonNegativeNumber);
  auto* all_flag = chi_cmd->add_flag("--all", "Every p = 0..n");
  p_opt->excludes(all_flag);
  chi_cmd->callback([&] {
    if (!p_opt->count() && !all_flag->count()) throw CLI::RequiredError("--p or --all");
  });

  auto* chow = app.add_subcommand("chow", "Rank of the higher Chow group Ch_r(X, m)");
  chow->add_option("EXPR", expr_text, "Toric variety expression")->required();
  std::int64_t chow_r = 0;
  std::int64_t chow_m = 0;
  chow->add_option("--r", chow_r, "Cycle dimension r")->required()->check(CLI::NonNegativeNumber);
  chow->add_option("--m", chow_m, "Simplicial degree m")->required()->check(CLI::NonNegativeNumber);

  auto* series = app.add_subcommand("series", "Generating-function coefficients");
  series->require_subcommand(1);
  std::int64_t series_d = 1;
  std::int64_t b2 = 0;
  std::string cells_text;
  auto* hilb = series->add_subcommand("hilb", "Betti numbers of Hilb^d of a rational surface");
  hilb->add_option("--b2", b2, "Second Betti number of the surface")
      ->required()
      ->check(CLI::NonNegativeNumber);
  hilb->add_option("--d", series_d, "Largest number of points")->required();
  hilb->add_option("--format", format_name, "plain|json|csv")->check(CLI::IsMember(formats));
  auto* sp = series->add_subcommand("sp", "Rational Betti numbers of SP^d of a cellular variety");
  sp->add_option("--cells", cells_text, "Cell dimensions, e.g. [0,1,1,2]")->required();
  sp->add_option("--d", series_d, "Largest symmetric power")->required();
  sp->add_option("--format", format_name, "plain|json|csv")->check(CLI::IsMember(formats));

  auto* check = app.add_subcommand("check", "Run the built-in oracle suites");
  std::string suite = "all";
  check->add_option("--suite", suite, "all|torus|toric|quadric|hilb|sp|suspension")
      ->check(CLI::IsMember(check_suites()));

  // help text of the innermost subcommand that was reached
  auto innermost_help = [&app] {
    const CLI::App* cur = &app;
    while (!cur->get_subcommands().empty()) cur = cur->get_subcommands().front();
    return cur->help();
  };
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << innermost_help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << innermost_help();
    return kParseError;
  }

  try {
    if (eval->parsed()) {
      const auto result = evaluate(parse(expr_text));
      write_table(out, result, format_from(format_name),
                  max_r_opt->count() ? std::optional(max_r) : std::nullopt);
    } else if (chi_cmd->parsed()) {
      const auto expr = parse(expr_text);
      if (all_flag->count()) {
        const auto profile = chi_profile(expr);
        for (std::size_t i = 0; i < profile.values.size(); ++i) {
          out << (i ? " " : "") << "p=" << i << ':' << profile.values[i];
        }
        out << '\n';
      } else {
        out << "p=" << p << ':' << chi(expr, p) << '\n';
      }
    } else if (chow->parsed()) {
      out << higher_chow(parse(expr_text), chow_r, chow_m) << '\n';
    } else if (hilb->parsed()) {
      write_series(out, cheah_series(b2, series_d), format_from(format_name));
    } else if (sp->parsed()) {
      const auto profile = CellProfile::from_cells(parse_natlist(cells_text));
      write_series(out, macdonald_series(profile.counts(), series_d), format_from(format_name));
    } else if (check->parsed()) {
      const auto report = run_checks(suite);
      std::size_t passed = 0;
      for (const auto& o : report.outcomes) {
        out << (o.passed ? "PASS  " : "FAIL  ") << o.property << "  [" << o.instances << ']';
        if (!o.passed) out << "  -- " << o.detail;
        out << '\n';
        passed += o.passed ? 1 : 0;
      }
      out << passed << '/' << report.outcomes.size() << " properties passed\n";
      return report.all_passed() ? kOk : kChecksFailed;
    }
  } catch (const ParseError& e) {
    const bool from_cells = sp->parsed();
    err << format_parse_error(e, from_cells ? cells_text : expr_text) << '\n';
    return kParseError;
  } catch (const UnsupportedQuery& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return kOk;
}

}  // namespace lawson::cli
