// Command-line interface over the schur library. Every verb is a thin
// adapter: parse arguments, call one library operation path, render the
// result as text or as a single JSON object (--json).
//
// Exit codes: 0 success, 1 usage or input parse error, 2 domain error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schur/bialternant.hpp"
#include "schur/conegeom.hpp"
#include "schur/glchar.hpp"
#include "schur/kostka.hpp"
#include "schur/matrix.hpp"
#include "schur/partitions.hpp"
#include "schur/symexpr.hpp"
#include "schur/symfunc.hpp"
#include "schur/tableaux.hpp"

namespace {

using json = nlohmann::json;
using namespace schur;

// Fixed default so casual runs are reproducible.
constexpr std::uint64_t kDefaultSeed = 123456789;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string approx6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string rational_with_approx(const Rational& r) {
  return r.str() + " (≈ " + approx6(r.to_double()) + ")";
}

Partition parse_partition_arg(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid partition '") + text + "': " + e.what());
  }
}

std::vector<std::string> split_commas(std::string_view text) {
  if (!text.empty() && text.front() == '[' && text.back() == ']')
    text = text.substr(1, text.size() - 2);
  std::vector<std::string> items;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    items.emplace_back(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return items;
}

Composition parse_composition_arg(const std::string& text) {
  Composition out;
  for (const std::string& item : split_commas(text)) {
    try {
      const int value = std::stoi(item);
      if (value < 0) throw UsageError("composition entries must be non-negative");
      out.push_back(value);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("invalid composition '" + text + "'");
    }
  }
  return out;
}

std::vector<Rational> parse_rational_list_arg(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& item : split_commas(text)) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw UsageError("invalid rational list '" + text + "': " + e.what());
    }
  }
  return out;
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

json terms_to_json(const SymPoly& f) {
  json terms = json::array();
  for (const auto& [lam, c] : f.coeffs()) {
    terms.push_back({{"partition", partition_to_json(lam)}, {"coefficient", c.str()}});
  }
  return terms;
}

// x-variable polynomial text, e.g. "x1^3*x2 + x1^2*x2^2".
std::string expansion_to_text(const MonomialExpansion& expansion) {
  if (expansion.terms.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : expansion.terms) {
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += '-';
    const Rational magnitude = abs(c);
    std::string vars;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += "x" + std::to_string(i + 1);
      if (alpha[i] > 1) vars += "^" + std::to_string(alpha[i]);
    }
    if (vars.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != Rational(1)) out += magnitude.str() + "*";
      out += vars;
    }
  }
  return out;
}

void cmd_partitions(int k, bool as_json) {
  const auto list = partitions_of(k);
  if (as_json) {
    json out = {{"degree", k}, {"count", list.size()}, {"partitions", json::array()}};
    for (const auto& p : list) out["partitions"].push_back(partition_to_json(p));
    std::cout << out.dump() << "\n";
    return;
  }
  for (const auto& p : list) std::cout << p.to_string() << "\n";
}

void cmd_ssyt(const std::string& shape_text, const std::string& max_entry_text,
              const std::string& content_text, bool as_json) {
  const Partition shape = parse_partition_arg(shape_text);
  if (max_entry_text.empty() == content_text.empty())
    throw UsageError("ssyt: give either a max entry or --content, not both");

  std::vector<Tableau> tableaux;
  json out = {{"shape", partition_to_json(shape)}};
  if (!content_text.empty()) {
    const Composition content = parse_composition_arg(content_text);
    tableaux = enumerate_ssyt_content(shape, content);
    out["content"] = content;
  } else {
    int max_entry = 0;
    try {
      max_entry = std::stoi(max_entry_text);
    } catch (const std::exception&) {
      throw UsageError("ssyt: invalid max entry '" + max_entry_text + "'");
    }
    tableaux = enumerate_ssyt(shape, max_entry);
    out["max_entry"] = max_entry;
  }

  if (as_json) {
    out["count"] = tableaux.size();
    out["tableaux"] = json::array();
    for (const auto& t : tableaux) out["tableaux"].push_back(t.rows());
    std::cout << out.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    if (i > 0) std::cout << "\n";
    std::cout << tableaux[i].to_string() << "\n";
  }
}

void cmd_kostka(const std::string& shape_text, const std::string& content_text, bool as_json) {
  const Partition shape = parse_partition_arg(shape_text);
  const Partition content = parse_partition_arg(content_text);
  const long long value = kostka_number(shape, content);
  if (as_json) {
    std::cout << json{{"shape", partition_to_json(shape)},
                      {"content", partition_to_json(content)},
                      {"value", value}}
                     .dump()
              << "\n";
    return;
  }
  std::cout << value << "\n";
}

void cmd_kostka_matrix(int k) {
  const KostkaMatrix& table = kostka_matrix(k);
  json out = {{"degree", k}, {"order", json::array()}, {"entries", json::array()}};
  for (const auto& p : table.order) out["order"].push_back(partition_to_json(p));
  for (Eigen::Index i = 0; i < table.entries.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < table.entries.cols(); ++j)
      row.push_back(table.entries(i, j).numerator().convert_to<long long>());
    out["entries"].push_back(row);
  }
  std::cout << out.dump() << "\n";
}

void cmd_schur_expand(const std::string& partition_text, int nvars, bool as_json) {
  const Partition lam = parse_partition_arg(partition_text);
  const SymPoly f = schur_to_monomial(lam);
  json out = {{"partition", partition_to_json(lam)},
              {"basis", "monomial"},
              {"terms", terms_to_json(f)},
              {"expression", render_symexpr(f)}};
  std::string text = render_symexpr(f);
  if (nvars >= 0) {
    const MonomialExpansion expansion = expand_in_variables(f, nvars);
    out["nvars"] = nvars;
    json terms = json::array();
    for (const auto& [alpha, c] : expansion.terms)
      terms.push_back({{"exponents", alpha}, {"coefficient", c.str()}});
    out["expansion"] = terms;
    text = expansion_to_text(expansion);
  }
  if (as_json)
    std::cout << out.dump() << "\n";
  else
    std::cout << text << "\n";
}

void cmd_to_schur(const std::string& expr_text, bool as_json) {
  const SymExpr expr = parse_symexpr(expr_text);
  SymPoly f = expr.to_sympoly();
  if (expr.basis != Basis::monomial)
    throw UsageError("to-schur: input must be a monomial-basis ('m') expression");
  const SymPoly g = to_schur_basis(f);
  if (as_json) {
    std::cout << json{{"input", expr_text},
                      {"basis", "schur"},
                      {"terms", terms_to_json(g)},
                      {"expression", render_symexpr(g)}}
                     .dump()
              << "\n";
    return;
  }
  std::cout << render_symexpr(g) << "\n";
}

void cmd_positivity(const std::string& expr_text, bool as_json) {
  const SymExpr expr = parse_symexpr(expr_text);
  const SymPoly f = expr.to_sympoly();
  // Schur-basis input is its own expansion; monomial input goes through
  // the basis change.
  const SymPoly expansion = expr.basis == Basis::schur ? f : to_schur_basis(f);
  bool positive = true;
  for (const auto& [lam, c] : expansion.coeffs()) {
    (void)lam;
    if (c.sign() < 0) positive = false;
  }
  if (as_json) {
    std::cout << json{{"input", expr_text},
                      {"schur_positive", positive},
                      {"schur_expansion", render_symexpr(expansion)},
                      {"terms", terms_to_json(expansion)}}
                     .dump()
              << "\n";
    return;
  }
  std::cout << (positive ? "Schur positive" : "NOT Schur positive")
            << "; s-expansion: " << render_symexpr(expansion) << "\n";
}

void cmd_probability(int k, bool as_json) {
  const Rational p = schur_positivity_probability(k);
  if (as_json) {
    std::cout << json{{"degree", k}, {"probability", p.str()}, {"approx", p.to_double()}}.dump()
              << "\n";
    return;
  }
  std::cout << rational_with_approx(p) << "\n";
}

void cmd_sample(int k, long long samples, std::uint64_t seed, int workers, bool as_json) {
  const MonteCarloReport report = sample_positivity(k, samples, seed, workers);
  if (as_json) {
    std::cout << json{{"degree", report.degree},
                      {"samples", report.n_samples},
                      {"seed", report.seed},
                      {"positives", report.positive_count},
                      {"estimate", report.estimate},
                      {"std_error", report.std_error},
                      {"exact", report.exact_probability.str()},
                      {"exact_approx", report.exact_probability.to_double()}}
                     .dump()
              << "\n";
    return;
  }
  std::cout << "degree: " << report.degree << "\n"
            << "samples: " << report.n_samples << "\n"
            << "seed: " << report.seed << "\n"
            << "positives: " << report.positive_count << "\n"
            << "estimate: " << approx6(report.estimate) << "\n"
            << "std_error: " << approx6(report.std_error) << "\n"
            << "exact: " << rational_with_approx(report.exact_probability) << "\n";
}

void cmd_bialternant(const std::string& partition_text, const std::string& points_text,
                     bool as_json) {
  const Partition mu = parse_partition_arg(partition_text);
  const std::vector<Rational> x = parse_rational_list_arg(points_text);
  const Rational value = bialternant_eval(mu, x);
  if (as_json) {
    json points = json::array();
    for (const auto& r : x) points.push_back(r.str());
    std::cout << json{{"partition", partition_to_json(mu)}, {"points", points},
                      {"value", value.str()}}
                     .dump()
              << "\n";
    return;
  }
  std::cout << value.str() << "\n";
}

void cmd_char(const std::string& sym2_text, bool schur_mode, const std::string& schur_partition,
              const std::string& schur_eigenvalues, bool as_json) {
  if (sym2_text.empty() == !schur_mode)
    throw UsageError("char: give exactly one of --sym2 or --schur");
  if (!sym2_text.empty()) {
    if (!schur_partition.empty() || !schur_eigenvalues.empty())
      throw UsageError("char --sym2 takes no positional arguments");
    const std::vector<Rational> entries = parse_rational_list_arg(sym2_text);
    if (entries.size() != 4) throw UsageError("char --sym2 expects four entries a,b,c,d");
    RationalMatrix m(2, 2);
    m << entries[0], entries[1], entries[2], entries[3];
    const Rational value = char_sym_square(m);
    if (as_json) {
      std::cout << json{{"kind", "sym2"},
                        {"matrix", {{entries[0].str(), entries[1].str()},
                                    {entries[2].str(), entries[3].str()}}},
                        {"value", value.str()}}
                       .dump()
                << "\n";
    } else {
      std::cout << value.str() << "\n";
    }
    return;
  }
  if (schur_partition.empty() || schur_eigenvalues.empty())
    throw UsageError("char --schur needs a partition and an eigenvalue list");
  const Partition lam = parse_partition_arg(schur_partition);
  const std::vector<Rational> eigenvalues = parse_rational_list_arg(schur_eigenvalues);
  const Rational value = char_schur_eval(lam, eigenvalues);
  if (as_json) {
    json eig = json::array();
    for (const auto& r : eigenvalues) eig.push_back(r.str());
    std::cout << json{{"kind", "schur"},
                      {"partition", partition_to_json(lam)},
                      {"eigenvalues", eig},
                      {"value", value.str()}}
                     .dump()
              << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with symmetric polynomials: Kostka numbers, "
               "Schur expansions, Schur positivity, and positivity probabilities."};
  app.require_subcommand(1);

  // partitions
  int partitions_k = 0;
  bool partitions_json = false;
  auto* partitions_cmd = app.add_subcommand("partitions", "List the partitions of k");
  partitions_cmd->add_option("k", partitions_k, "Degree")->required();
  partitions_cmd->add_flag("--json", partitions_json, "Emit JSON");
  partitions_cmd->callback([&] { cmd_partitions(partitions_k, partitions_json); });

  // ssyt
  std::string ssyt_shape, ssyt_max, ssyt_content;
  bool ssyt_json = false;
  auto* ssyt_cmd =
      app.add_subcommand("ssyt", "Enumerate semistandard Young tableaux of a shape");
  ssyt_cmd->add_option("shape", ssyt_shape, "Shape partition, e.g. [3,1]")->required();
  ssyt_cmd->add_option("max_entry", ssyt_max, "Largest allowed entry");
  ssyt_cmd->add_option("--content", ssyt_content, "Exact content, e.g. 2,2,1");
  ssyt_cmd->add_flag("--json", ssyt_json, "Emit JSON");
  ssyt_cmd->callback([&] { cmd_ssyt(ssyt_shape, ssyt_max, ssyt_content, ssyt_json); });

  // kostka
  std::string kostka_shape, kostka_content;
  bool kostka_json = false;
  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number K(shape, content)");
  kostka_cmd->add_option("shape", kostka_shape, "Shape partition")->required();
  kostka_cmd->add_option("content", kostka_content, "Content partition")->required();
  kostka_cmd->add_flag("--json", kostka_json, "Emit JSON");
  kostka_cmd->callback([&] { cmd_kostka(kostka_shape, kostka_content, kostka_json); });

  // kostka-matrix
  int kostka_matrix_k = 0;
  bool kostka_matrix_json = false;
  auto* kostka_matrix_cmd =
      app.add_subcommand("kostka-matrix", "Full Kostka matrix for degree k (JSON)");
  kostka_matrix_cmd->add_option("k", kostka_matrix_k, "Degree")->required();
  kostka_matrix_cmd->add_flag("--json", kostka_matrix_json, "Emit JSON (default for this verb)");
  kostka_matrix_cmd->callback([&] { cmd_kostka_matrix(kostka_matrix_k); });

  // schur-expand
  std::string expand_partition;
  int expand_vars = -1;
  bool expand_json = false;
  auto* expand_cmd =
      app.add_subcommand("schur-expand", "Expand a Schur polynomial in the monomial basis");
  expand_cmd->add_option("partition", expand_partition, "Indexing partition")->required();
  expand_cmd->add_option("--vars", expand_vars, "Also expand fully in this many variables");
  expand_cmd->add_flag("--json", expand_json, "Emit JSON");
  expand_cmd->callback([&] { cmd_schur_expand(expand_partition, expand_vars, expand_json); });

  // to-schur
  std::string to_schur_expr;
  bool to_schur_json = false;
  auto* to_schur_cmd =
      app.add_subcommand("to-schur", "Rewrite a monomial-basis expression in the Schur basis");
  to_schur_cmd->add_option("expr", to_schur_expr, "Expression, e.g. \"m[2,1] + 2*m[1,1,1]\"")
      ->required();
  to_schur_cmd->add_flag("--json", to_schur_json, "Emit JSON");
  to_schur_cmd->callback([&] { cmd_to_schur(to_schur_expr, to_schur_json); });

  // positivity
  std::string positivity_expr;
  bool positivity_json = false;
  auto* positivity_cmd = app.add_subcommand("positivity", "Test Schur positivity");
  positivity_cmd->add_option("expr", positivity_expr, "Expression to test")->required();
  positivity_cmd->add_flag("--json", positivity_json, "Emit JSON");
  positivity_cmd->callback([&] { cmd_positivity(positivity_expr, positivity_json); });

  // probability
  int probability_k = 0;
  bool probability_json = false;
  auto* probability_cmd =
      app.add_subcommand("probability", "Exact Schur-positivity probability in degree k");
  probability_cmd->add_option("k", probability_k, "Degree")->required();
  probability_cmd->add_flag("--json", probability_json, "Emit JSON");
  probability_cmd->callback([&] { cmd_probability(probability_k, probability_json); });

  // sample
  int sample_k = 0;
  long long sample_n = 100000;
  std::uint64_t sample_seed = kDefaultSeed;
  int sample_workers = 0;
  bool sample_json = false;
  auto* sample_cmd =
      app.add_subcommand("sample", "Monte Carlo estimate of the positivity probability");
  sample_cmd->add_option("k", sample_k, "Degree")->required();
  sample_cmd->add_option("--samples", sample_n, "Number of samples (default 100000)");
  sample_cmd->add_option("--seed", sample_seed, "RNG seed (default fixed for reproducibility)");
  sample_cmd->add_option("--workers", sample_workers, "Worker threads (0 = hardware)");
  sample_cmd->add_flag("--json", sample_json, "Emit JSON");
  sample_cmd->callback(
      [&] { cmd_sample(sample_k, sample_n, sample_seed, sample_workers, sample_json); });

  // bialternant
  std::string bialt_partition, bialt_points;
  bool bialt_json = false;
  auto* bialt_cmd =
      app.add_subcommand("bialternant", "Schur value via the quotient of determinants");
  bialt_cmd->add_option("partition", bialt_partition, "Indexing partition")->required();
  bialt_cmd->add_option("points", bialt_points, "Evaluation points, e.g. 1,2,3 or 1/2,3,5")
      ->required();
  bialt_cmd->add_flag("--json", bialt_json, "Emit JSON");
  bialt_cmd->callback([&] { cmd_bialternant(bialt_partition, bialt_points, bialt_json); });

  // char
  std::string char_sym2;
  bool char_schur_mode = false;
  std::string char_partition, char_eigenvalues;
  bool char_json = false;
  auto* char_cmd = app.add_subcommand("char", "Character values of GL representations");
  char_cmd->add_option("--sym2", char_sym2, "2x2 matrix entries a,b,c,d");
  char_cmd->add_flag("--schur", char_schur_mode,
                     "Evaluate the character indexed by a partition at given eigenvalues");
  char_cmd->add_option("partition", char_partition, "Indexing partition (with --schur)");
  char_cmd->add_option("eigenvalues", char_eigenvalues, "Eigenvalue list (with --schur)");
  char_cmd->add_flag("--json", char_json, "Emit JSON");
  char_cmd->callback([&] {
    cmd_char(char_sym2, char_schur_mode, char_partition, char_eigenvalues, char_json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const schur::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
