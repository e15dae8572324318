#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "chebms/decision.hpp"
#include "chebms/diagonal_operator.hpp"
#include "chebms/errors.hpp"
#include "chebms/hyperbolicity.hpp"
#include "chebms/serialize.hpp"

namespace chebms::cli {

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* sign_word(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

void write_verdict(const Verdict& v, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << to_json(v).dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows{{"status", std::string(to_string(v.status))}};
  if (const auto* s = std::get_if<SignWitness>(&v.witness)) {
    rows.emplace_back("n", std::to_string(s->n));
    rows.emplace_back("q2n", s->q2n.to_string());
    rows.emplace_back("q2n2", s->q2n2.to_string());
  } else if (const auto* r = std::get_if<NonRealWitness>(&v.witness)) {
    rows.emplace_back("counterexample", r->counterexample.to_string());
    rows.emplace_back("image", r->image.to_string());
    rows.emplace_back("delta", r->delta.to_string());
  }
  rows.emplace_back("notes", v.notes);
  if (format == Format::Csv) {
    out << "field,value\n";
    for (const auto& [k, val] : rows) out << k << "," << csv_quote(val) << "\n";
  } else {
    for (const auto& [k, val] : rows) out << k << ": " << val << "\n";
  }
}

void write_q_table(const SequenceSpec& spec, std::size_t k_max, Format format, std::ostream& out) {
  const SymbolPrefix prefix = symbol_prefix(spec, k_max);
  std::vector<BigRational> q;
  for (std::size_t k = 0; k <= k_max; ++k) q.push_back(prefix.coefficients[2 * k]);
  auto paired = [&](std::size_t k) { return k >= 1 && k < k_max && q[k].sign() * q[k + 1].sign() > 0; };

  if (format == Format::Json) {
    Json j = to_json(spec, prefix);
    Json rows = Json::array();
    for (std::size_t k = 0; k <= k_max; ++k) {
      rows.push_back(Json{{"k", k}, {"q2k", to_json(q[k])}, {"sign", q[k].sign()}, {"pair_with_next", paired(k)}});
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
  } else if (format == Format::Csv) {
    out << "k,q2k,sign,pair_with_next\n";
    for (std::size_t k = 0; k <= k_max; ++k) {
      out << k << "," << q[k] << "," << q[k].sign() << "," << (paired(k) ? 1 : 0) << "\n";
    }
  } else {
    out << "spec: " << spec.to_string() << "\n";
    for (std::size_t k = 0; k <= k_max; ++k) {
      out << "k=" << k << "  Q_" << 2 * k << "(0) = " << q[k] << "  [" << sign_word(q[k].sign()) << "]"
          << (paired(k) ? "  same sign as next" : "") << "\n";
    }
  }
}

void write_identities(const std::vector<IdentityCheck>& checks, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << to_json(checks).dump(2) << "\n";
  } else if (format == Format::Csv) {
    out << "identity,checked_range,pass\n";
    for (const auto& c : checks) out << c.label << "," << csv_quote(c.checked_range) << "," << (c.pass ? 1 : 0) << "\n";
  } else {
    for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.label << "  (" << c.checked_range << ")\n";
  }
}

void write_falsify(const SequenceSpec& spec, std::size_t degree_max, std::uint64_t seed, std::size_t trials,
                   const std::optional<Counterexample>& found, Format format, std::ostream& out) {
  if (format == Format::Json) {
    Json j{{"spec", spec.to_string()},
           {"degree_max", degree_max},
           {"seed", seed},
           {"trials", trials},
           {"found", found.has_value()},
           {"counterexample", found ? to_json(*found) : Json(nullptr)}};
    out << j.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    out << "found,input_poly,image_poly,input_real_roots,image_real_root_deficit\n";
    if (found) {
      out << "1," << csv_quote(found->input.to_string()) << "," << csv_quote(found->image.to_string()) << ","
          << found->input_real_roots << "," << found->image_real_root_deficit << "\n";
    } else {
      out << "0,,,,\n";
    }
    return;
  }
  if (!found) {
    out << "none found (" << trials << " trials, degree <= " << degree_max << ", seed " << seed << ")\n";
    return;
  }
  out << "counterexample found\n"
      << "input:  " << found->input.to_string() << "  (" << found->input_real_roots << " distinct real roots)\n"
      << "image:  " << found->image.to_string() << "  (" << found->image_real_root_deficit
      << " non-real roots in the square-free part)\n";
}

}  // namespace

int identities_verify(const IdentityRanges& ranges, const WorpitzkyTable& table, Format format, std::ostream& out) {
  const auto checks = verify_identities(ranges, table);
  write_identities(checks, format, out);
  return all_pass(checks) ? kExitOk : kExitIdentityFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chebyshev-basis multiplier sequence analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::Json;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
  app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  std::string out_path;
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  std::string coeffs_text;
  std::string ratio_text;
  std::string spec_text;
  std::size_t k_max = 50;
  std::size_t degree_max = 4;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  IdentityRanges ranges;

  auto* analyze_poly = app.add_subcommand("analyze-poly", "Sign-pair test for gamma_k = p(k)");
  analyze_poly->add_option("--coeffs", coeffs_text, "b0,b1,... with gamma_k = sum b_i k^i")->required();
  analyze_poly->add_option("--k-max", k_max, "Largest scan index")->check(CLI::PositiveNumber);

  auto* analyze_geom = app.add_subcommand("analyze-geometric", "Test gamma_k = r^k");
  analyze_geom->add_option("--ratio", ratio_text, "r as p/q")->required();

  auto* q_table = app.add_subcommand("q-table", "Tabulate Q_2k(0)");
  q_table->add_option("--spec", spec_text, "poly:b0,b1,... | geom:r | explicit:g0,g1,...")->required();
  q_table->add_option("--k-max", k_max, "Largest k")->check(CLI::PositiveNumber);

  auto* identities = app.add_subcommand("identities-verify", "Check the closed-form identity chain");
  identities->add_option("--n-max", ranges.n_max, "Largest n for the A/N identities")->check(CLI::PositiveNumber);
  identities->add_option("--k-max", ranges.k_max, "Largest k for the A identities")->check(CLI::PositiveNumber);

  auto* falsify = app.add_subcommand("falsify", "Random search for a hyperbolicity counterexample");
  falsify->add_option("--spec", spec_text, "poly:b0,b1,... | geom:r | explicit:g0,g1,...")->required();
  falsify->add_option("--degree-max", degree_max, "Largest candidate degree")->check(CLI::PositiveNumber);
  falsify->add_option("--seed", seed, "PRNG seed");
  falsify->add_option("--trials", trials, "Number of candidates")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cannot open output file " << out_path << "\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    if (analyze_poly->parsed()) {
      write_verdict(classify_polynomial_sequence(parse_rational_list(coeffs_text), k_max), format, sink);
    } else if (analyze_geom->parsed()) {
      write_verdict(geometric_ms_test(BigRational::parse(ratio_text)), format, sink);
    } else if (q_table->parsed()) {
      write_q_table(SequenceSpec::parse(spec_text), k_max, format, sink);
    } else if (identities->parsed()) {
      return identities_verify(ranges, WorpitzkyTable(std::max(ranges.n_max, ranges.worpitzky_n_max)), format, sink);
    } else if (falsify->parsed()) {
      const SequenceSpec spec = SequenceSpec::parse(spec_text);
      write_falsify(spec, degree_max, seed, trials, falsify_ms(spec, degree_max, seed, trials), format, sink);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace chebms::cli
