#include "rsf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "rsf/haar.hpp"
#include "rsf/json_io.hpp"

namespace rsf {

namespace {

const std::vector<std::string> kCommands = {
    "forward",  "invert",        "ldu",          "ordering", "validate-ordering",
    "canonical-word", "count-words", "jacobian", "haar-density", "dual", "self-check"};

struct Job {
  std::string command;
  std::string family = "A";
  int rank = 0;
  int gl = 0;
  std::string word;
  std::string input;
  std::string output;
  bool minors = false;
};

json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json read_input(const Job& job, std::istream& in) {
  if (job.input.empty()) throw Error(ErrorKind::invalid_input, "--input is required for " + job.command);
  try {
    if (job.input == "-") return json::parse(in);
    std::ifstream f(job.input);
    if (!f) throw Error(ErrorKind::invalid_input, "cannot open " + job.input);
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::invalid_input, std::string("malformed JSON: ") + e.what());
  }
}

RootSystem root_system(const Job& job) {
  if (job.gl > 0) {
    if (job.family != "A") throw Error(ErrorKind::invalid_input, "--gl applies to family A only");
    return RootSystem(Family::A, job.gl - 1);
  }
  if (job.rank <= 0) throw Error(ErrorKind::invalid_input, "--rank (or --gl) is required");
  return RootSystem(parse_family(job.family), job.rank);
}

Word job_word(const Job& job, const RootSystem& rs, bool require_w0) {
  Word w = job.word.empty() ? canonical_word(rs.family(), rs.rank()) : parse_word(job.word);
  if (require_w0 && !is_reduced_for_w0(rs, w))
    throw Error(ErrorKind::invalid_word, "word is not a reduced word for w0");
  return w;
}

bool self_check(json& report) {
  bool pass = true;
  json delta = json::object();
  const std::vector<std::pair<Family, int>> configs = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
      {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 3}, {Family::D, 4}};
  for (auto [fam, r] : configs) {
    RootSystem rs(fam, r);
    Chart chart(realize(rs), canonical_word(fam, r));
    bool ok = delta_identity_check(chart);
    delta[std::string(1, family_letter(fam)) + std::to_string(r)] = ok;
    pass = pass && ok;
  }
  report["delta_identity"] = delta;

  json jac = json::object();
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<int> dist(-3, 3);
  const std::vector<std::pair<Family, int>> small = {
      {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::C, 2}, {Family::D, 3}};
  for (auto [fam, r] : small) {
    RootSystem rs(fam, r);
    Chart chart(realize(rs), canonical_word(fam, r));
    bool ok = true;
    for (int t = 0; t < 3; ++t) {
      ZetaCoords z;
      for (int j = 0; j < chart.length(); ++j)
        z.pairs.emplace_back(Scalar(dist(rng), dist(rng)), Scalar(dist(rng), dist(rng)));
      Scalar a = jacobian_det_formula(z, chart);
      ok = ok && a == jacobian_double_product(z, chart) && a == jacobian_det_ad(z, chart);
    }
    jac[std::string(1, family_letter(fam)) + std::to_string(r)] = ok;
    pass = pass && ok;
  }
  report["jacobian_triple_equality"] = jac;

  json counts = json::object();
  for (int n = 3; n <= 5; ++n) {
    RootSystem rs(Family::A, n - 1);
    std::size_t got = enumerate_reduced_words(rs, longest_element(rs), 1000000).size();
    bool ok = mpz_class(static_cast<unsigned long>(got)) == stanley_count(n);
    counts[std::to_string(n)] = ok;
    pass = pass && ok;
  }
  report["stanley"] = counts;
  report["pass"] = pass;
  return pass;
}

int execute(const Job& job, std::istream& in, json& result) {
  const std::string& c = job.command;
  if (c == "self-check") return self_check(result) ? 0 : 1;

  RootSystem rs = root_system(job);
  if (c == "canonical-word") {
    result["word"] = canonical_word(rs.family(), rs.rank());
    return 0;
  }
  if (c == "ordering") {
    Word w = job_word(job, rs, false);
    RootOrdering ord = ordering_from_word(rs, w);
    result["word"] = w;
    result["ordering"] = roots_json(rs, ord.roots);
    return 0;
  }
  if (c == "validate-ordering") {
    OrderingCheck chk = validate_ordering(rs, ordering_from_json(read_input(job, in)));
    result["valid"] = chk.valid;
    if (chk.valid)
      result["word"] = chk.word;
    else
      result["failed_at"] = chk.failed_at;
    return 0;
  }
  if (c == "count-words") {
    std::size_t got = enumerate_reduced_words(rs, longest_element(rs), 5000000).size();
    result["enumerated"] = got;
    if (rs.family() == Family::A) {
      result["formula"] = big(stanley_count(rs.rank() + 1));
    } else if (rs.family() == Family::B || rs.family() == Family::C) {
      mpq_class k = kraskiewicz_printed(rs.rank());
      result["kraskiewicz_printed"] = k.get_den() == 1 ? big(k.get_num()) : json(k.get_str());
      result["square_hook"] = big(square_hook_count(rs.rank()));
    }
    return 0;
  }
  if (c == "ldu") {
    QMatrix g = matrix_from_json(read_input(job, in));
    if (!g.square()) throw Error(ErrorKind::invalid_input, "matrix is not square");
    LDU<Scalar> f = job.minors ? ldu_minors(g) : ldu(g);
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < g.rows(); ++i) d.push_back(f.d(i, i));
    result["l"] = to_json(f.l);
    result["d"] = to_json(d);
    result["u"] = to_json(f.u);
    return 0;
  }

  Chart chart(realize(rs), job_word(job, rs, true));
  json input = read_input(job, in);
  if (c == "forward") {
    ForwardResult fr = forward_map(chart, zeta_from_json(input));
    result["g"] = to_json(fr.g);
    json coords = to_json(fr.coords);
    result.update(coords);
  } else if (c == "invert") {
    result = to_json(inverse_map(coords_from_json(input), chart));
  } else if (c == "jacobian") {
    ZetaCoords z = zeta_from_json(input);
    Scalar a = jacobian_det_formula(z, chart);
    Scalar b = jacobian_double_product(z, chart);
    Scalar d = jacobian_det_ad(z, chart);
    result["formula"] = a.str();
    result["double_product"] = b.str();
    result["ad"] = d.str();
    result["agree"] = a == b && a == d;
  } else if (c == "haar-density") {
    ZetaCoords z = zeta_from_json(input);
    result["density"] = haar_density(z, chart).get_str();
  } else if (c == "dual") {
    result = to_json(transpose_dual(zeta_from_json(input), chart));
  }
  return 0;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::exceptional_set:
    case ErrorKind::stratum_failure:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Root subgroup factorization for classical groups", "rsf"};
  Job job;
  app.add_option("command", job.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--family", job.family, "Root system family: A, B, C or D");
  app.add_option("--rank", job.rank, "Rank of the root system");
  app.add_option("--gl", job.gl, "Shorthand for --family A --rank N-1");
  app.add_option("--word", job.word, "Comma separated reduced word, r_1 first");
  app.add_option("--input", job.input, "Input JSON file, or - for stdin");
  app.add_option("--output", job.output, "Write the result here instead of stdout");
  app.add_flag("--minors", job.minors, "ldu: compute from minors (GL only)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    Error wrapped(ErrorKind::invalid_input, e.what());
    out << render(to_json(wrapped));
    err << "error: " << e.what() << "\n";
    return 2;
  }

  json result = json::object();
  int code = 0;
  try {
    code = execute(job, in, result);
  } catch (const Error& e) {
    out << render(to_json(e));
    err << "error: " << kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }

  std::string text = render(result);
  if (job.output.empty()) {
    out << text;
  } else {
    std::ofstream f(job.output);
    if (!f) {
      Error e(ErrorKind::invalid_input, "cannot write " + job.output);
      out << render(to_json(e));
      return 2;
    }
    f << text;
  }
  return code;
}

}  // namespace rsf
