#include "leinartas/app.hpp"

#include "leinartas/decompose.hpp"
#include "leinartas/errors.hpp"
#include "leinartas/parser.hpp"
#include "leinartas/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

namespace leinartas {

namespace {

struct Options {
  std::string expression;
  std::string input_file;
  std::string vars;
  std::vector<std::string> factors;
  std::string format = "text";
  bool verify = false;
  bool certificates = false;
  bool normalize = true;
};

struct LineResult {
  int code = exit_ok;
  std::string out;
  std::string err;
};

LineResult process(const std::string &source, const ContextPtr &ctx, const Options &opt,
                   OutputFormat format, bool compact_json, const std::string &label) {
  LineResult r;
  try {
    RationalExpression f = parse_rational(source, ctx);
    std::optional<std::vector<FactorPower>> factors;
    if (!opt.factors.empty()) {
      factors.emplace();
      for (const auto &spec : opt.factors)
        factors->push_back(parse_factor_spec(spec, ctx));
    }
    Decomposition dec = leinartas_decompose(f, factors);
    if (opt.normalize)
      dec = normalize(dec);
    std::optional<VerificationReport> report;
    if (opt.verify) {
      report = verify(dec);
      if (!report->overall) {
        r.code = exit_verify_fail;
        r.err = label + "verification failed\n";
      }
    }
    const VerificationReport *rp = report ? &*report : nullptr;
    if (format == OutputFormat::json && compact_json)
      r.out = to_json(dec, rp, opt.certificates).dump() + "\n";
    else
      r.out = render(dec, rp, format, opt.certificates).payload;
  } catch (const UsageError &e) {
    r = {exit_usage, "", label + "error: " + e.what() + "\n"};
  } catch (const DomainError &e) {
    r = {exit_domain, "", label + "error: " + e.what() + "\n"};
  } catch (const InternalError &e) {
    r = {exit_internal, "", label + "internal error: " + e.what() + "\n"};
  }
  return r;
}

// Strips a trailing `#` comment and surrounding whitespace.
std::string clean_line(const std::string &line) {
  std::string s = line.substr(0, line.find('#'));
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int run_decompose(const Options &opt, std::ostream &out, std::ostream &err) {
  auto format = parse_output_format(opt.format);
  if (!format) {
    err << "error: unknown format '" << opt.format << "'\n";
    return exit_usage;
  }
  if (opt.expression.empty() == opt.input_file.empty()) {
    err << "error: give exactly one of an expression or --input FILE\n";
    return exit_usage;
  }
  ContextPtr ctx;
  try {
    ctx = parse_variable_list(opt.vars);
  } catch (const UsageError &e) {
    err << "error: --vars: " << e.what() << '\n';
    return exit_usage;
  }

  if (!opt.expression.empty()) {
    auto r = process(opt.expression, ctx, opt, *format, false, "");
    out << r.out;
    err << r.err;
    return r.code;
  }

  std::ifstream in(opt.input_file);
  if (!in) {
    err << "error: cannot open '" << opt.input_file << "'\n";
    return exit_usage;
  }
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n)
    if (auto s = clean_line(line); !s.empty())
      lines.emplace_back(n, std::move(s));

  // Lines are independent; results are emitted in input order.
  std::vector<std::future<LineResult>> jobs;
  for (const auto &[n, src] : lines) {
    std::string label = opt.input_file + ":" + std::to_string(n) + ": ";
    jobs.push_back(std::async(std::launch::async, [&, label, src = src] {
      return process(src, ctx, opt, *format, true, label);
    }));
  }
  int code = exit_ok;
  bool first = true;
  for (auto &job : jobs) {
    auto r = job.get();
    if (!r.out.empty()) {
      if (!first && *format != OutputFormat::json)
        out << '\n';
      first = false;
      out << r.out;
    }
    err << r.err;
    code = std::max(code, r.code);
  }
  return code;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact multivariate partial fraction decomposition over Q"};
  app.require_subcommand(1);
  Options opt;
  auto *dec = app.add_subcommand("decompose", "Decompose rational expressions into partial fractions");
  dec->add_option("expression", opt.expression, "Rational expression, e.g. \"1/(X*Y*(X*Y+1))\"");
  dec->add_option("--input", opt.input_file, "File with one expression per line ('#' comments)");
  dec->add_option("--vars", opt.vars, "Comma separated variable order, e.g. X,Y,Z")->required();
  dec->add_option("--factor", opt.factors, "Denominator factor as POLY:EXP (repeatable)")
      ->allow_extra_args(false);
  dec->add_option("--format", opt.format, "Output format: text, json or latex");
  dec->add_flag("--verify", opt.verify, "Append a verification report; exit 3 if it fails");
  dec->add_flag("--certificates", opt.certificates, "Include the certificates that were used");
  dec->add_flag("--normalize,!--no-normalize", opt.normalize,
                "Merge terms and reduce numerators (default on)");

  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    // Prints help for --help, a diagnostic otherwise.
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }
  return run_decompose(opt, out, err);
}

} // namespace leinartas
