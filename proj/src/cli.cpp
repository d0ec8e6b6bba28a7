#include "charp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "charp/diffops.hpp"
#include "charp/error.hpp"
#include "charp/groebner.hpp"
#include "charp/jacobian.hpp"
#include "charp/orderloci.hpp"
#include "charp/parse.hpp"

namespace charp::cli {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

json strings(const std::vector<Polynomial>& polys) {
  json a = json::array();
  for (const auto& f : polys) a.push_back(f.to_string());
  return a;
}

json names(const std::vector<BasisElement>& elems) {
  json a = json::array();
  for (const auto& b : elems) a.push_back(b.name);
  return a;
}

json order_json(const OrderValue& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::vector<std::string> lines_of(const json& arr) {
  std::vector<std::string> out;
  for (const auto& s : arr) out.push_back(s.get<std::string>());
  return out;
}

struct Report {
  json inputs = json::object();
  json result = json::object();
  json provenance = json::object();
  std::string text;
};

struct PrimeArgs {
  std::string point;
  std::string prime_gens;
  bool assert_prime = false;
};

void add_prime_options(CLI::App* cmd, PrimeArgs& args) {
  auto* pt = cmd->add_option("--point", args.point, "rational point, e.g. x=0,y=(v+1)/v");
  auto* pg = cmd->add_option("--prime-gens", args.prime_gens, "prime ideal generators, ';'-separated");
  pt->excludes(pg);
  cmd->add_flag("--assert-prime", args.assert_prime, "vouch that --prime-gens generate a prime");
}

PrimeSpec make_prime(const PrimeArgs& args, const Ring& ring, json& inputs) {
  if (!args.point.empty()) {
    inputs["point"] = args.point;
    return RationalPoint{parse_point(args.point, ring)};
  }
  if (!args.prime_gens.empty()) {
    inputs["prime_gens"] = args.prime_gens;
    inputs["assert_prime"] = args.assert_prime;
    return PrimeGenerators{Ideal(ring, parse_poly_list(args.prime_gens, ring)), args.assert_prime};
  }
  throw Error(ErrorCode::InvalidArgument, "a prime is required: --point or --prime-gens");
}

std::vector<Polynomial> parse_gens(const std::vector<std::string>& args, const Ring& ring) {
  std::vector<Polynomial> out;
  for (const auto& a : args)
    for (auto& f : parse_poly_list(a, ring)) out.push_back(std::move(f));
  return out;
}

json provenance_entries(const std::vector<SaturationEntry>& entries, const Ring& ring) {
  json a = json::array();
  for (const auto& e : entries)
    a.push_back({{"gen_index", e.generator}, {"beta", format_multi_index(e.beta, ring)}});
  return a;
}

}  // namespace

std::vector<std::string> expand_file_arguments(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  out.reserve(args.size());
  for (const auto& a : args) {
    if (a.size() < 2 || a[0] != '@') {
      out.push_back(a);
      continue;
    }
    std::ifstream in(a.substr(1), std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read input file '" + a.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string content = ss.str();
    while (!content.empty() && std::isspace(static_cast<unsigned char>(content.back())))
      content.pop_back();
    out.push_back(std::move(content));
  }
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err,
        const char* env_format) {
  CLI::App app{"Regularity and order loci over F_p(v_1..v_m)", "charp"};
  app.require_subcommand(1);

  SessionConfig config;
  std::string base, vars, order_tag = "grevlex", format;
  app.add_option("--p", config.p, "characteristic (a prime below 65536)")->required();
  app.add_option("--base", base, "base parameters v_1..v_m, comma-separated");
  app.add_option("--vars", vars, "geometric variables x_1..x_n, comma-separated");
  app.add_option("--order", order_tag, "monomial order: grevlex, lex, block");
  app.add_option("--format", format, "output format: text or json");
  app.add_option("--threads", config.threads, "worker threads for saturation")->check(CLI::Range(1u, 256u));

  std::vector<std::string> gens;
  std::size_t r = 0;
  std::uint64_t n = 0, n_max = 0;
  std::string beta_text, local_order;
  bool reduce = false, taylor = false, oracle = false;
  std::optional<std::size_t> quotient_r;
  PrimeArgs prime_args;

  auto* sing = app.add_subcommand("sing-locus", "singular-locus ideal J + <r x r Jacobian minors>");
  sing->add_option("gens", gens, "generators")->required();
  sing->add_option("--r", r, "height of J at the primes of interest")->required();
  sing->add_flag("--reduce", reduce, "also report a reduced Groebner basis");

  auto* reg = app.add_subcommand("regular", "extended Jacobian regularity test at a prime");
  reg->add_option("gens", gens, "generators")->required();
  reg->add_option("--r", r, "height of J A_P")->required();
  add_prime_options(reg, prime_args);

  auto* ord = app.add_subcommand("order", "order of a polynomial or ideal at a prime");
  ord->add_option("gens", gens, "polynomial, or several for an ideal")->required();
  ord->add_flag("--oracle", oracle, "also run the translation oracle (points only)");
  add_prime_options(ord, prime_args);

  auto* strat = app.add_subcommand("stratify", "order loci for N = 1..Nmax");
  strat->add_option("gens", gens, "generators")->required();
  strat->add_option("--nmax", n_max, "largest order threshold")->required()->check(CLI::PositiveNumber);
  strat->add_flag("--reduce", reduce, "interreduce each level");

  auto* has = app.add_subcommand("hasse", "apply D^beta");
  has->add_option("poly", gens, "polynomial")->required()->expected(1);
  has->add_option("--beta", beta_text, "multi-index, e.g. v:1,x:2")->required();
  has->add_flag("--taylor", taylor, "use the Taylor-expansion implementation");

  auto* sat = app.add_subcommand("saturate", "differential saturation of order <= n");
  sat->add_option("gens", gens, "generators")->required();
  sat->add_option("--n", n, "operator order")->required();

  auto* gb = app.add_subcommand("groebner", "reduced Groebner basis over F_p(v)");
  gb->add_option("gens", gens, "generators")->required();
  gb->add_option("--order", local_order, "monomial order: grevlex, lex, block");

  auto* ref = app.add_subcommand("refit", "exchange basis elements for parameters z_1..z_d");
  ref->add_option("params", gens, "parameters")->required();
  ref->add_option("--r", quotient_r, "also describe the quotient by z_1..z_r");
  add_prime_options(ref, prime_args);

  auto* dec = app.add_subcommand("decompose-p", "f = sum g_alpha^p B^alpha");
  dec->add_option("poly", gens, "polynomial")->required()->expected(1);

  auto fail = [&](int code, const std::string& kind, const std::string& message,
                  const std::string& command) {
    if (config.output_format == OutputFormat::Json) {
      json j;
      j["command"] = command;
      j["error"] = {{"kind", kind}, {"message", message}};
      out << j.dump(2) << "\n";
    }
    err << "error: " << message << "\n";
    return code;
  };

  std::vector<std::string> args;
  try {
    args = expand_file_arguments(raw_args);
  } catch (const Error& e) {
    return fail(kExitInputError, error_name(e.code()), e.what(), "");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(kExitInputError, "UsageError", e.what(), "");
  }

  if (format.empty() && env_format) {
    format = env_format;
    if (format != "json" && format != "text")
      return fail(kExitInputError, "UsageError", "CHARP_OUTPUT must be 'text' or 'json'", "");
  }
  if (!format.empty()) {
    if (format == "json") config.output_format = OutputFormat::Json;
    else if (format == "text") config.output_format = OutputFormat::Text;
    else return fail(kExitInputError, "UsageError", "unknown format '" + format + "'", "");
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string command = cmd->get_name();

  try {
    config.base_params = split_commas(base);
    config.variables = split_commas(vars);
    auto mo = parse_order(order_tag);
    if (!mo) throw Error(ErrorCode::InvalidArgument, "unknown monomial order '" + order_tag + "'");
    config.monomial_order = *mo;
    Ring ring = RingContext::create(config.p, config.base_params, config.variables, *mo);

    Report rep;
    rep.inputs["p"] = config.p;
    rep.inputs["base"] = config.base_params;
    rep.inputs["vars"] = config.variables;
    rep.inputs["order"] = order_name(config.monomial_order);
    rep.inputs["args"] = gens;

    if (cmd == sing) {
      auto polys = parse_gens(gens, ring);
      rep.inputs["r"] = r;
      SingularLocus locus = singular_locus(polys, r);
      rep.result["generators"] = strings(locus.ideal.generators());
      rep.result["no_minors"] = locus.no_minors;
      rep.provenance["operation"] = "singular_locus";
      rep.provenance["jacobian_columns"] = names(finite_support(polys));
      rep.text = join_lines(lines_of(rep.result["generators"]));
      if (reduce) {
        rep.result["reduced"] = strings(buchberger(locus.ideal, config.monomial_order).polynomials());
        rep.text += "reduced:\n" + join_lines(lines_of(rep.result["reduced"]));
      }
      if (locus.no_minors) err << "warning: r exceeds the Jacobian size; no minors added\n";
    } else if (cmd == reg) {
      auto polys = parse_gens(gens, ring);
      rep.inputs["r"] = r;
      PrimeSpec prime = make_prime(prime_args, ring, rep.inputs);
      RegularityReport report = regularity_test(polys, prime, r);
      JacobianMatrix m = extended_jacobian(polys);
      rep.result["rank"] = report.rank_mod_prime;
      rep.result["r"] = report.r;
      rep.result["regular"] = report.regular;
      if (report.witness) {
        json cols = json::array();
        for (std::size_t c : report.witness->cols) cols.push_back(m.columns[c].name);
        rep.result["witness_rows"] = report.witness->rows;
        rep.result["witness_cols"] = cols;
      } else {
        rep.result["witness_rows"] = nullptr;
        rep.result["witness_cols"] = nullptr;
      }
      rep.provenance["operation"] = "regularity_test";
      rep.provenance["jacobian_columns"] = names(m.columns);
      rep.text = std::string("regular: ") + (report.regular ? "true" : "false") +
                 "\nrank: " + std::to_string(report.rank_mod_prime) +
                 "\nr: " + std::to_string(report.r) + "\n";
    } else if (cmd == ord) {
      auto polys = parse_gens(gens, ring);
      PrimeSpec prime = make_prime(prime_args, ring, rep.inputs);
      OrderValue value = OrderValue::infinity();
      json per = json::array();
      if (polys.size() == 1) {
        value = order_at(polys[0], prime);
        rep.provenance["operation"] = "order_at";
      } else {
        Ideal ideal(ring, polys);
        value = ideal_order_at(ideal, prime);
        PrimeMembership membership(ring, prime);
        for (const auto& g : ideal.generators()) per.push_back(order_json(order_at(g, membership)));
        rep.provenance["operation"] = "ideal_order_at";
      }
      rep.result["order"] = order_json(value);
      if (polys.size() != 1) rep.result["per_generator"] = per;
      rep.text = value.to_string() + "\n";
      if (oracle) {
        const auto* pt = std::get_if<RationalPoint>(&prime);
        if (!pt) throw Error(ErrorCode::InvalidArgument, "--oracle requires --point");
        OrderValue best = OrderValue::infinity();
        for (const auto& g : polys) best = std::min(best, oracle_order_at_point(g, pt->coords));
        rep.result["oracle_order"] = order_json(best);
        rep.text += "oracle: " + best.to_string() + "\n";
      }
    } else if (cmd == strat) {
      Ideal ideal(ring, parse_gens(gens, ring));
      rep.inputs["nmax"] = n_max;
      json levels = json::array();
      for (const auto& level : stratify(ideal, n_max, reduce, config.threads)) {
        levels.push_back({{"N", level.n},
                          {"generators", strings(level.ideal.generators())},
                          {"provenance", provenance_entries(level.provenance, ring)}});
        rep.text += "N=" + std::to_string(level.n) + ":";
        for (const auto& g : level.ideal.generators()) rep.text += " " + g.to_string();
        rep.text += "\n";
      }
      rep.result["levels"] = levels;
      rep.provenance["operation"] = "stratify";
    } else if (cmd == has) {
      Polynomial f = parse_poly(gens.at(0), ring);
      MultiIndex beta = parse_multi_index(beta_text, ring);
      rep.inputs["beta"] = beta_text;
      Polynomial value = taylor ? taylor_hasse(f, beta) : hasse(f, beta);
      rep.result["value"] = value.to_string();
      rep.provenance["operation"] = taylor ? "taylor_hasse" : "hasse";
      rep.provenance["beta"] = format_multi_index(beta, ring);
      rep.text = value.to_string() + "\n";
    } else if (cmd == sat) {
      Ideal ideal(ring, parse_gens(gens, ring));
      rep.inputs["n"] = n;
      SaturationResult s = diff_saturate(ideal, n, config.threads);
      rep.result["generators"] = strings(s.generators());
      rep.provenance["operation"] = "diff_saturate";
      rep.provenance["entries"] = provenance_entries(s.entries, ring);
      rep.text = join_lines(lines_of(rep.result["generators"]));
    } else if (cmd == gb) {
      MonomialOrder mo2 = config.monomial_order;
      if (!local_order.empty()) {
        auto o = parse_order(local_order);
        if (!o) throw Error(ErrorCode::InvalidArgument, "unknown monomial order '" + local_order + "'");
        mo2 = *o;
      }
      Ideal ideal(ring, parse_gens(gens, ring));
      GroebnerBasis basis = buchberger(ideal, mo2);
      rep.result["basis"] = strings(basis.polynomials());
      rep.result["order"] = order_name(mo2);
      rep.provenance["operation"] = "buchberger";
      rep.text = join_lines(lines_of(rep.result["basis"]));
    } else if (cmd == ref) {
      auto params = parse_gens(gens, ring);
      PrimeSpec prime = make_prime(prime_args, ring, rep.inputs);
      BasisRefit refit = refit_p_basis(params, prime);
      rep.result["removed"] = names(refit.removed);
      rep.result["kept"] = names(refit.kept);
      rep.result["localizer"] = refit.localizer.to_string();
      rep.provenance["operation"] = "refit_p_basis";
      rep.text = "removed: " + rep.result["removed"].dump() + "\nkept: " + rep.result["kept"].dump() +
                 "\nlocalizer: " + refit.localizer.to_string() + "\n";
      if (quotient_r) {
        rep.inputs["r"] = *quotient_r;
        QuotientBasis q = quotient_p_basis(params, *quotient_r, prime);
        json basis = names(q.kept);
        for (const auto& z : q.parameters) basis.push_back(z.to_string());
        rep.result["quotient"] = {{"basis", basis},
                                  {"relations", strings(q.relations.generators())},
                                  {"localizer", q.localizer.to_string()}};
        rep.provenance["operation"] = "quotient_p_basis";
        rep.text += "quotient basis: " + basis.dump() + "\n";
      }
    } else if (cmd == dec) {
      Polynomial f = parse_poly(gens.at(0), ring);
      json parts = json::array();
      for (const auto& [alpha, g] : p_power_decompose(f)) {
        parts.push_back({{"alpha", format_multi_index(alpha, ring)}, {"g", g.to_string()}});
        rep.text += format_multi_index(alpha, ring) + " -> " + g.to_string() + "\n";
      }
      rep.result["parts"] = parts;
      rep.provenance["operation"] = "p_power_decompose";
    }

    if (config.output_format == OutputFormat::Json) {
      json j;
      j["command"] = command;
      j["inputs_echo"] = rep.inputs;
      j["result"] = rep.result;
      j["provenance"] = rep.provenance;
      out << j.dump(2) << "\n";
    } else {
      out << rep.text;
    }
    return kExitOk;
  } catch (const Error& e) {
    return fail(is_input_error(e.code()) ? kExitInputError : kExitMathError, error_name(e.code()),
                e.what(), command);
  }
}

}  // namespace charp::cli
