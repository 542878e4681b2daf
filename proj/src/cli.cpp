#include "gcface/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcface/f_polynomial.hpp"
#include "gcface/face_correspondence.hpp"
#include "gcface/face_enumeration.hpp"
#include "gcface/lemma_checks.hpp"
#include "gcface/pde_check.hpp"
#include "gcface/serialization.hpp"
#include "gcface/spectrum.hpp"

namespace gcface {

using nlohmann::json;

namespace {

inline constexpr const char* kVerifyFormat = "gcface.verify/1";
inline constexpr const char* kOracleReportFormat = "gcface.oracle-report/1";
inline constexpr const char* kGoldenReportFormat = "gcface.golden-report/1";
inline constexpr const char* kBenchFormat = "gcface.bench/1";
inline constexpr const char* kWriteReportFormat = "gcface.golden-write/1";

inline constexpr std::size_t kOracleEdgeBound = 20;
inline constexpr std::size_t kDefaultListingBound = 24;
inline constexpr int kMaxTableN = 10;
inline constexpr int kMaxIsoN = 5;
inline constexpr int kMaxOracleN = 10;
inline constexpr int kMaxPdeS = 4;
inline constexpr int kMaxDegree = 10;

struct RunConfig {
  std::string k;
  std::string lambda;
  std::string target;
  std::string format = "human";
  std::string golden;
  int s = 0;
  int degree = 6;
  int max_n = 4;
  int table_max_n = 0;
  std::size_t max_edges = kDefaultListingBound;
  bool decompose = false;
};

class Refusal : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string join_counts(const std::vector<mpz_class>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

std::string join_counts(const std::vector<std::uint64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string edge_list(const LadderDiagram& d, const EdgeSet& edges) {
  std::string out = "{";
  bool first = true;
  for (std::size_t e : edges.indices()) {
    if (!first) out += ", ";
    first = false;
    out += d.edges()[e].to_string();
  }
  return out + "}";
}

bool is_json(const RunConfig& c) { return c.format == "json"; }

std::vector<Composition> compositions_up_to(int max_n) {
  std::vector<Composition> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& k : compositions_of(n)) out.push_back(std::move(k));
  }
  return out;
}

void print_fvector(std::ostream& out, const Composition& k, const FPolynomial& f) {
  out << "k = " << paren(k.to_string()) << '\n';
  out << "f = " << join_counts(f.coefficients()) << '\n';
  out << "F(t) = " << f.to_string() << '\n';
}

// Recomputes each f-vector along the face recursion, and by brute force when
// the diagram is small enough.
std::optional<std::string> cross_check(const Composition& k) {
  const DiagramPtr d = diagram_for(k);
  const FPolynomial f = f_polynomial(k);
  const auto recursive = enumerate_faces(d);
  if (join_counts(dimension_counts(recursive)) != join_counts(f.coefficients())) {
    return "enumerated faces disagree with F_k for k = " + paren(k.to_string());
  }
  if (d->edge_count() <= kOracleEdgeBound && brute_force_faces(d, kOracleEdgeBound) != recursive) {
    return "brute-force faces disagree with enumeration for k = " + paren(k.to_string());
  }
  return std::nullopt;
}

int cmd_fvector(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.k.empty() == (c.table_max_n == 0)) {
    err << "fvector needs exactly one of --k or --max-n\n";
    return kExitUsage;
  }
  if (!c.k.empty()) {
    if (!c.golden.empty()) {
      err << "--golden writes a table; combine it with --max-n\n";
      return kExitUsage;
    }
    const Composition k = Composition::parse(c.k);
    const FPolynomial f = f_polynomial(k);
    if (is_json(c)) {
      out << fvector_record(k, f).dump(2) << '\n';
    } else {
      print_fvector(out, k, f);
    }
    return kExitOk;
  }

  const auto compositions = compositions_up_to(c.table_max_n);
  if (!c.golden.empty()) {
    for (const auto& k : compositions) {
      if (auto problem = cross_check(k)) {
        err << "refusing to write golden file: " << *problem << '\n';
        return kExitCheckFailed;
      }
    }
    std::ofstream file(c.golden);
    if (!file) throw Refusal("cannot open " + c.golden + " for writing");
    file << fvector_table(compositions).dump(2) << '\n';
    if (is_json(c)) {
      out << json{{"format", kWriteReportFormat}, {"path", c.golden}, {"records", compositions.size()}}.dump(2)
          << '\n';
    } else {
      out << "wrote " << compositions.size() << " cross-checked records to " << c.golden << '\n';
    }
    return kExitOk;
  }
  if (is_json(c)) {
    out << fvector_table(compositions).dump(2) << '\n';
    return kExitOk;
  }
  bool first = true;
  for (const auto& k : compositions) {
    if (!first) out << '\n';
    first = false;
    print_fvector(out, k, f_polynomial(k));
  }
  return kExitOk;
}

int cmd_faces(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Composition k = Composition::parse(c.k);
  const DiagramPtr d = diagram_for(k);
  if (d->edge_count() > c.max_edges) {
    err << "the ladder diagram of k = " << paren(k.to_string()) << " has " << d->edge_count()
        << " edges, above the listing bound of " << c.max_edges << "; raise --max-edges or run `gcface fvector --k "
        << k.to_string() << "` for the counts\n";
    return kExitUsage;
  }
  const auto faces = enumerate_faces(d);
  if (is_json(c)) {
    out << face_list_record(d, faces, c.decompose).dump(2) << '\n';
    return kExitOk;
  }
  out << "k = " << paren(k.to_string()) << ", " << d->edge_count() << " edges, " << faces.size() << (faces.size() == 1 ? " face\n" : " faces\n");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const DiagramFace& f = faces[i];
    out << "[" << i << "] dim " << f.dimension() << "  bits " << f.to_hex() << "  " << edge_list(*d, f.edges());
    if (c.decompose && !d->is_degenerate()) {
      const FaceDecomposition parts = decompose_face(f);
      out << "  word " << (parts.word.length() ? parts.word.to_string() : "-") << "  child "
          << paren(parts.child.diagram().composition().to_string()) << " bits " << parts.child.to_hex();
    }
    out << '\n';
  }
  return kExitOk;
}

struct CheckLog {
  bool passed = true;
  std::size_t checks = 0;
  json reports = json::array();
  std::vector<std::string> lines;

  void add(bool ok, json report, std::string line) {
    ++checks;
    passed = passed && ok;
    reports.push_back(std::move(report));
    lines.push_back(std::string(ok ? "PASS " : "FAIL ") + line);
  }
};

void verify_iso(const RunConfig& c, CheckLog& log) {
  if (c.max_n > kMaxIsoN) {
    throw Refusal("iso: the polyhedral oracle is limited to n <= " + std::to_string(kMaxIsoN));
  }
  std::vector<Spectrum> spectra;
  if (!c.lambda.empty()) {
    spectra.push_back(Spectrum::parse(c.lambda));
    if (spectra.back().n() > c.max_n) {
      throw Refusal("iso: lambda has n = " + std::to_string(spectra.back().n()) + ", above --max-n " +
                    std::to_string(c.max_n) + " (at most " + std::to_string(kMaxIsoN) + ")");
    }
  } else {
    for (const auto& k : compositions_up_to(c.max_n)) {
      spectra.push_back(Spectrum::with_blocks(k, 0));
      spectra.push_back(Spectrum::with_blocks(k, 1));
    }
  }
  for (const auto& lambda : spectra) {
    const IsomorphismReport r = verify_isomorphism(lambda, c.max_n);
    std::string line = "iso lambda=" + paren(r.spectrum) + " k=" + paren(r.composition) + ": ";
    if (r.passed()) {
      line += std::to_string(r.diagram_faces) + (r.diagram_faces == 1 ? " face" : " faces") + " matched, f = " + join_counts(r.diagram_counts);
    } else {
      line += r.counterexample.value_or("polytope f = " + join_counts(r.polytope_counts) +
                                        ", diagram f = " + join_counts(r.diagram_counts));
    }
    log.add(r.passed(), iso_report_record(r), std::move(line));
  }
}

void verify_series(const RunConfig& c, CheckLog& log, bool gkt) {
  if (c.degree > kMaxDegree) {
    throw Refusal("pde: --degree is limited to " + std::to_string(kMaxDegree));
  }
  std::vector<int> orders;
  if (c.s > 0) {
    orders.push_back(c.s);
  } else {
    orders = {1, 2, 3};
  }
  for (int s : orders) {
    if (s > c.degree) {
      throw Refusal("pde: --degree must be at least s (s = " + std::to_string(s) + ", degree = " +
                    std::to_string(c.degree) + ")");
    }
    const PdeReport r = gkt ? verify_gkt_pde(s, c.degree) : verify_main_pde(s, c.degree);
    std::string line = r.identity + " s=" + std::to_string(s) + " N=" + std::to_string(c.degree) + ": ";
    if (r.passed()) {
      line += "residual zero on " + std::to_string(r.checked_monomials) + " monomials up to degree " +
              std::to_string(r.validity_degree);
    } else {
      line += std::to_string(r.residual.size()) + " nonzero residual terms";
    }
    log.add(r.passed(), pde_report_record(r), std::move(line));
  }
}

void verify_oracle(const RunConfig& c, CheckLog& log) {
  if (c.max_n > kMaxOracleN) {
    throw Refusal("oracle: --max-n is limited to " + std::to_string(kMaxOracleN));
  }
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t faces = 0;
  std::optional<std::string> counterexample;
  for (const auto& k : compositions_up_to(c.max_n)) {
    const DiagramPtr d = diagram_for(k);
    if (d->edge_count() > kOracleEdgeBound) {
      ++skipped;
      continue;
    }
    ++checked;
    const auto brute = brute_force_faces(d, kOracleEdgeBound);
    const auto recursive = enumerate_faces(d);
    faces += brute.size();
    if (brute != recursive) {
      counterexample = "face sets differ for k = " + paren(k.to_string());
      break;
    }
    if (join_counts(dimension_counts(brute)) != join_counts(f_vector(k))) {
      counterexample = "f-polynomial disagrees with the faces for k = " + paren(k.to_string());
      break;
    }
  }
  json report = {{"format", kOracleReportFormat},
                 {"max_n", c.max_n},
                 {"edge_bound", kOracleEdgeBound},
                 {"compositions_checked", checked},
                 {"compositions_skipped", skipped},
                 {"faces_compared", faces},
                 {"passed", !counterexample}};
  report["counterexample"] = counterexample ? json(*counterexample) : json(nullptr);
  std::string line = "oracle max-n=" + std::to_string(c.max_n) + ": ";
  if (counterexample) {
    line += *counterexample;
  } else {
    line += std::to_string(checked) + " compositions agree (" + std::to_string(faces) + " faces)";
    if (skipped) line += ", " + std::to_string(skipped) + " above " + std::to_string(kOracleEdgeBound) + " edges skipped";
  }
  log.add(!counterexample, std::move(report), std::move(line));
}

void verify_lemmas(const RunConfig& c, CheckLog& log) {
  const int max_s = c.s > 0 ? c.s : 3;
  if (max_s > kMaxPdeS || c.degree > kMaxDegree) {
    throw Refusal("lemmas: s is limited to " + std::to_string(kMaxPdeS) + " and --degree to " +
                  std::to_string(kMaxDegree));
  }
  for (const IdentityReport& r : {check_operator_expansion(max_s, c.degree), check_monomial_action(max_s, c.degree),
                                  check_word_inverse(5, 1, 4)}) {
    std::string line = "lemma " + r.name + ": " + std::to_string(r.cases) + " cases";
    if (r.counterexample) line += ", counterexample " + *r.counterexample;
    log.add(r.passed(), identity_report_record(r), std::move(line));
  }
}

void verify_golden(const RunConfig& c, CheckLog& log) {
  if (c.golden.empty()) throw Refusal("verify golden needs --golden PATH");
  std::ifstream file(c.golden);
  if (!file) throw Refusal("cannot read " + c.golden);
  json table;
  try {
    table = json::parse(file);
  } catch (const json::exception& e) {
    throw Refusal("malformed golden file " + c.golden + ": " + e.what());
  }
  if (!table.is_object() || table.value("format", "") != kFVectorTableFormat) {
    throw Refusal(c.golden + " is not a " + std::string(kFVectorTableFormat) + " record");
  }
  json mismatches = json::array();
  std::size_t records = 0;
  for (const auto& record : table.at("records")) {
    ++records;
    const Composition k = composition_from_json(record.at("composition"));
    if (fpolynomial_from_record(record) != f_polynomial(k)) mismatches.push_back(k.to_string());
  }
  const bool ok = mismatches.empty() && records > 0;
  std::string line = "golden " + c.golden + ": " + std::to_string(records) + " records";
  if (!mismatches.empty()) line += ", " + std::to_string(mismatches.size()) + " mismatches";
  log.add(ok,
          json{{"format", kGoldenReportFormat},
               {"path", c.golden},
               {"records", records},
               {"mismatches", mismatches},
               {"passed", ok}},
          std::move(line));
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  CheckLog log;
  const std::string& t = c.target;
  const bool all = t == "all";
  if (all || t == "iso") verify_iso(c, log);
  if (all || t == "pde") verify_series(c, log, false);
  if (all || t == "gkt") verify_series(c, log, true);
  if (all || t == "oracle") verify_oracle(c, log);
  if (all || t == "lemmas") verify_lemmas(c, log);
  if (t == "golden" || (all && !c.golden.empty())) verify_golden(c, log);

  if (is_json(c)) {
    out << json{{"format", kVerifyFormat}, {"target", t}, {"checks", log.checks}, {"passed", log.passed},
                {"reports", log.reports}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& line : log.lines) out << line << '\n';
    out << "verify " << t << ": " << (log.passed ? "PASS" : "FAIL") << " (" << log.checks << " checks)\n";
  }
  return log.passed ? kExitOk : kExitCheckFailed;
}

double time_ms(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_bench(const RunConfig& c, std::ostream& out) {
  const Composition k = Composition::parse(c.k);
  const DiagramPtr d = diagram_for(k);
  json timings = json::object();
  std::vector<std::pair<std::string, double>> rows;
  auto record = [&](const std::string& name, double ms) {
    timings[name] = ms;
    rows.emplace_back(name, ms);
  };
  FPolynomial f;
  record("f_polynomial", time_ms([&] { f = f_polynomial(k); }));
  record("f_polynomial_memoized", time_ms([&] { f = f_polynomial(k); }));
  if (d->edge_count() <= c.max_edges) {
    record("enumerate_faces", time_ms([&] { (void)enumerate_faces(d); }));
  }
  if (d->edge_count() <= kOracleEdgeBound) {
    record("brute_force_faces", time_ms([&] { (void)brute_force_faces(d, kOracleEdgeBound); }));
  }
  if (is_json(c)) {
    json r = fvector_record(k, f);
    r["format"] = kBenchFormat;
    r["edge_count"] = d->edge_count();
    r["timings_ms"] = timings;
    out << r.dump(2) << '\n';
    return kExitOk;
  }
  print_fvector(out, k, f);
  out << "edges = " << d->edge_count() << '\n';
  for (const auto& [name, ms] : rows) {
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << name << ": " << ms << " ms";
    out << line.str() << '\n';
  }
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Face lattices and f-vectors of Gelfand-Cetlin polytopes through ladder diagrams", "gcface"};
  app.require_subcommand(1, 1);
  const auto formats = CLI::IsMember({"human", "json"});

  CLI::App* fvector = app.add_subcommand("fvector", "f-vector and f-polynomial of a ladder diagram");
  auto* fk = fvector->add_option("--k", c.k, "composition, e.g. 1,1,1");
  auto* fmax = fvector->add_option("--max-n", c.table_max_n, "tabulate every composition of n <= N")
                   ->check(CLI::Range(1, kMaxTableN));
  fk->excludes(fmax);
  fvector->add_option("--golden", c.golden, "write the cross-checked table to this path (with --max-n)");
  fvector->add_option("--format", c.format, "human or json")->check(formats);

  CLI::App* faces = app.add_subcommand("faces", "list every face of a ladder diagram");
  faces->add_option("--k", c.k, "composition, e.g. 1,1,1")->required();
  faces->add_flag("--decompose", c.decompose, "show the terminal word and child face");
  faces->add_option("--max-edges", c.max_edges, "listing bound on the number of diagram edges");
  faces->add_option("--format", c.format, "human or json")->check(formats);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("target", c.target, "iso, pde, gkt, oracle, lemmas, golden or all")
      ->required()
      ->check(CLI::IsMember({"iso", "pde", "gkt", "oracle", "lemmas", "golden", "all"}));
  verify->add_option("--lambda", c.lambda, "spectrum for iso, e.g. 2,1,0 or 3/2,3/2,0");
  verify->add_option("--s", c.s, "order for pde and gkt (default: 1, 2 and 3)")->check(CLI::Range(1, kMaxPdeS));
  verify->add_option("--degree", c.degree, "truncation degree N")->check(CLI::PositiveNumber);
  verify->add_option("--max-n", c.max_n, "largest n swept by iso and oracle")->check(CLI::PositiveNumber);
  verify->add_option("--golden", c.golden, "golden f-vector table to regression-check");
  verify->add_option("--format", c.format, "human or json")->check(formats);

  CLI::App* bench = app.add_subcommand("bench", "time the f-polynomial and face enumeration");
  bench->add_option("--k", c.k, "composition, e.g. 1,1,1,1")->required();
  bench->add_option("--max-edges", c.max_edges, "skip face enumeration above this many edges");
  bench->add_option("--format", c.format, "human or json")->check(formats);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fvector->parsed()) return cmd_fvector(c, out, err);
    if (faces->parsed()) return cmd_faces(c, out, err);
    if (verify->parsed()) return cmd_verify(c, out);
    return cmd_bench(c, out);
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    err << "refused: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    err << "malformed record: " << e.what() << '\n';
  }
  return kExitUsage;
}

} // namespace gcface
