#include "cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <new>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "grovesim/analytic.hpp"
#include "grovesim/circuit.hpp"
#include "grovesim/errors.hpp"
#include "grovesim/statevector.hpp"

namespace grovesim::cli {
namespace {

using nlohmann::json;

class IoError : public Error {
 public:
  using Error::Error;
};

constexpr double kCompareTolerance = 1e-9;

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw ParameterError(std::string("invalid ") + what + " '" + text + "'");
  return value;
}

std::optional<std::size_t> parse_rotations(const std::string& text) {
  if (text == "auto") return std::nullopt;
  const auto k = parse_u64(text, "rotation count");
  if (k == 0) throw ParameterError("rotations must be at least 1");
  return static_cast<std::size_t>(k);
}

std::optional<OracleStyle> parse_oracle(const std::string& text, bool allow_none) {
  if (text == "v") return OracleStyle::VOracle;
  if (text == "cnz") return OracleStyle::CnZ;
  if (allow_none && text == "none") return std::nullopt;
  throw ParameterError("unknown oracle '" + text + "'");
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw ParameterError("unknown format '" + text + "'");
}

std::uint64_t resolve_seed(const std::string& flag) {
  if (!flag.empty()) return parse_u64(flag, "seed");
  if (const char* env = std::getenv(kSeedEnv); env && *env) return parse_u64(env, "seed");
  return kDefaultSeed;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string exact_digits(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string number_or_empty(const json& value) {
  return value.is_null() ? std::string{} : exact_digits(value.get<double>());
}

StateVector simulate(const Circuit& circuit) {
  return run(circuit);
}

// --- renderers --------------------------------------------------------------

std::string render_run(const json& r, Format format) {
  std::ostringstream out;
  const bool sampled = r["shots"].get<std::uint64_t>() > 0;
  const auto& counts = r["counts"];
  auto count_of = [&](const std::string& state) -> std::uint64_t {
    const auto it = counts.find(state);
    return it == counts.end() ? 0 : it->get<std::uint64_t>();
  };
  if (format == Format::Csv) {
    out << "pattern,qubits,rotations,style,shots,seed,state,exact,count\n";
    for (const auto& [state, p] : r["exact"].items()) {
      out << r["pattern"].get<std::string>() << ',' << r["qubits"] << ',' << r["rotations"] << ','
          << r["style"].get<std::string>() << ',' << r["shots"] << ',' << r["seed"] << ','
          << state << ',' << exact_digits(p.get<double>()) << ',';
      if (sampled) out << count_of(state);
      out << '\n';
    }
    return out.str();
  }
  out << "pattern    " << r["pattern"].get<std::string>() << '\n'
      << "qubits     " << r["qubits"] << " (+" << r["ancilla_qubits"] << " ancilla)\n"
      << "style      " << r["style"].get<std::string>() << '\n'
      << "rotations  " << r["rotations"] << '\n'
      << "shots      " << r["shots"] << '\n'
      << "seed       " << r["seed"] << "\n\n"
      << "state" << std::string(r["pattern"].get<std::string>().size() + 2 - 5 + 1, ' ')
      << "probability" << (sampled ? "  count" : "") << '\n';
  for (const auto& [state, p] : r["exact"].items()) {
    out << state << "  " << fixed(p.get<double>(), 6);
    if (sampled) out << "  " << count_of(state);
    out << '\n';
  }
  return out.str();
}

std::string render_analytic(const json& r, Format format) {
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "qubits,k,probability\n";
    for (const auto& row : r["rows"])
      out << r["qubits"] << ',' << row["k"] << ',' << fixed(row["probability"].get<double>(), 4)
          << '\n';
    return out.str();
  }
  out << "qubits " << r["qubits"] << "\n"
      << "k  probability  percent\n";
  for (const auto& row : r["rows"]) {
    const double p = row["probability"].get<double>();
    out << row["k"] << "  " << fixed(p, 4) << "       " << fixed(100.0 * p, 2) << "%\n";
  }
  return out.str();
}

std::string render_compare(const json& r, Format format) {
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "k,derived,exact,sampled,exact_deviation,sampled_deviation\n";
    for (const auto& row : r["rows"])
      out << row["k"] << ',' << exact_digits(row["derived"].get<double>()) << ','
          << exact_digits(row["exact"].get<double>()) << ',' << number_or_empty(row["sampled"])
          << ',' << exact_digits(row["exact_deviation"].get<double>()) << ','
          << number_or_empty(row["sampled_deviation"]) << '\n';
    return out.str();
  }
  out << "pattern " << r["pattern"].get<std::string>() << "  style "
      << r["style"].get<std::string>() << "  shots " << r["shots"] << "  seed " << r["seed"]
      << "\n"
      << "k  derived  exact    sampled  |exact-derived|\n";
  for (const auto& row : r["rows"]) {
    out << row["k"] << "  " << fixed(row["derived"].get<double>(), 4) << "   "
        << fixed(row["exact"].get<double>(), 4) << "   "
        << (row["sampled"].is_null() ? std::string("-     ")
                                     : fixed(row["sampled"].get<double>(), 4))
        << "   " << row["exact_deviation"].get<double>() << '\n';
  }
  out << (r["passed"].get<bool>() ? "PASS" : "FAIL") << ": exact vs derived within "
      << r["tolerance"].get<double>() << '\n';
  return out.str();
}

std::string render_phase_check(const json& r, Format format) {
  std::ostringstream out;
  if (format == Format::Csv) {
    out << "pattern,oracle,detected,state,probability\n";
    for (const auto& [state, p] : r["distribution"].items())
      out << r["pattern"].get<std::string>() << ',' << r["oracle"].get<std::string>() << ','
          << (r["detected"].get<bool>() ? "true" : "false") << ',' << state << ','
          << exact_digits(p.get<double>()) << '\n';
    return out.str();
  }
  out << "pattern " << r["pattern"].get<std::string>() << "  oracle "
      << r["oracle"].get<std::string>() << '\n';
  for (const auto& [state, p] : r["distribution"].items())
    out << state << "  " << fixed(p.get<double>(), 6) << '\n';
  out << "modal " << r["modal"].get<std::string>() << " ("
      << fixed(r["modal_probability"].get<double>(), 6) << ")\n"
      << r["verdict"].get<std::string>() << '\n';
  return out.str();
}

void emit(std::ostream& out, const json& report, const std::string& command, Format format) {
  out << render(report, command, format);
}

// --- subcommand wiring ------------------------------------------------------

struct Flags {
  std::string pattern;
  std::string qubits;
  std::string rotations = "auto";
  std::string shots = std::to_string(kDefaultShots);
  std::string seed;
  std::string oracle = "v";
  std::string format = "json";
  std::string out;
};

Pattern pattern_from(const Flags& f) {
  if (f.pattern.empty()) throw ParameterError("--pattern is required");
  return Pattern::parse(f.pattern);
}

std::size_t qubits_from(const Flags& f) {
  const auto n = parse_u64(f.qubits, "qubit count");
  if (n == 0) throw ParameterError("--qubits must be at least 1");
  if (n > analytic::kMaxQubits) throw SizeError("--qubits exceeds the supported width");
  return static_cast<std::size_t>(n);
}

RunConfig run_config_from(const Flags& f) {
  RunConfig c;
  c.pattern = pattern_from(f);
  c.rotations = parse_rotations(f.rotations);
  c.style = *parse_oracle(f.oracle, false);
  c.shots = parse_u64(f.shots, "shot count");
  c.seed = resolve_seed(f.seed);
  c.format = parse_format(f.format);
  return c;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dense statevector simulator and Grover search circuit builder", "grovesim"};
  app.require_subcommand(1);
  Flags f;

  auto* run_cmd = app.add_subcommand("run", "Build and simulate a Grover search circuit");
  run_cmd->add_option("--pattern", f.pattern, "Marked bit string, qubit 0 first")->required();
  run_cmd->add_option("--rotations", f.rotations, "Rotation count or 'auto'");
  run_cmd->add_option("--oracle", f.oracle, "Oracle style: v | cnz");
  run_cmd->add_option("--shots", f.shots, "Shots to sample; 0 for exact probabilities only");
  run_cmd->add_option("--seed", f.seed, "PRNG seed (default $GROVESIM_SEED or 42)");
  run_cmd->add_option("--format", f.format, "json | csv | text");

  auto* analytic_cmd = app.add_subcommand("analytic", "Derived marked-state probabilities");
  analytic_cmd->add_option("--qubits", f.qubits, "Search register width")->required();
  analytic_cmd->add_option("--rotations", f.rotations, "Largest rotation count or 'auto'");
  analytic_cmd->add_option("--format", f.format, "json | csv | text");

  auto* compare_cmd = app.add_subcommand("compare", "Derived vs simulated vs sampled");
  compare_cmd->add_option("--qubits", f.qubits, "Search register width (pattern all ones)");
  compare_cmd->add_option("--pattern", f.pattern, "Marked bit string");
  compare_cmd->add_option("--rotations", f.rotations, "Largest rotation count or 'auto'");
  compare_cmd->add_option("--oracle", f.oracle, "Oracle style: v | cnz");
  compare_cmd->add_option("--shots", f.shots, "Shots per row; 0 disables sampling");
  compare_cmd->add_option("--seed", f.seed, "PRNG seed");
  compare_cmd->add_option("--format", f.format, "json | csv | text");

  auto* export_cmd = app.add_subcommand("export", "Write the circuit as OpenQASM 2.0");
  export_cmd->add_option("--pattern", f.pattern, "Marked bit string")->required();
  export_cmd->add_option("--rotations", f.rotations, "Rotation count or 'auto'");
  export_cmd->add_option("--oracle", f.oracle, "Oracle style: v | cnz");
  export_cmd->add_option("--out", f.out, "Output path (stdout when omitted)");

  auto* phase_cmd = app.add_subcommand("phase-check", "Check that an oracle flips the phase");
  phase_cmd->add_option("--pattern", f.pattern, "Marked bit string")->required();
  phase_cmd->add_option("--oracle", f.oracle, "Oracle style: v | cnz | none");
  phase_cmd->add_option("--format", f.format, "json | csv | text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (run_cmd->parsed()) {
    const RunConfig config = run_config_from(f);
    emit(out, run_report(config), "run", config.format);
    return kOk;
  }
  if (analytic_cmd->parsed()) {
    const std::size_t n = qubits_from(f);
    const auto k = parse_rotations(f.rotations);
    emit(out, analytic_report(n, k ? *k : optimal_rotations(n)), "analytic",
         parse_format(f.format));
    return kOk;
  }
  if (compare_cmd->parsed()) {
    Pattern pattern = Pattern::all_ones(1);
    if (!f.pattern.empty()) {
      pattern = Pattern::parse(f.pattern);
      if (!f.qubits.empty() && qubits_from(f) != pattern.size())
        throw ParameterError("--qubits does not match the pattern length");
    } else if (!f.qubits.empty()) {
      pattern = Pattern::all_ones(qubits_from(f));
    } else {
      throw ParameterError("compare needs --qubits or --pattern");
    }
    const auto k = parse_rotations(f.rotations);
    const Format format = parse_format(f.format);
    const json report =
        compare_report(pattern, k ? *k : optimal_rotations(pattern.size()),
                       *parse_oracle(f.oracle, false), parse_u64(f.shots, "shot count"),
                       resolve_seed(f.seed));
    emit(out, report, "compare", format);
    return report["passed"].get<bool>() ? kOk : kCheckFailed;
  }
  if (export_cmd->parsed()) {
    Flags g = f;
    g.shots = "0";
    const RunConfig config = run_config_from(g);
    const std::string qasm =
        export_qasm(build_grover(config.pattern, resolve_rotations(config), config.style));
    if (f.out.empty())
      out << qasm;
    else
      write_file(f.out, qasm);
    return kOk;
  }
  if (phase_cmd->parsed()) {
    const Pattern pattern = pattern_from(f);
    emit(out, phase_check_report(pattern, parse_oracle(f.oracle, true)), "phase-check",
         parse_format(f.format));
    return kOk;
  }
  return kUsage;
}

}  // namespace

std::size_t resolve_rotations(const RunConfig& config) {
  return config.rotations ? *config.rotations : optimal_rotations(config.pattern.size());
}

json run_report(const RunConfig& config) {
  const std::size_t n = config.pattern.size();
  const std::size_t rotations = resolve_rotations(config);
  const Circuit circuit = build_grover(config.pattern, rotations, config.style);
  const StateVector state = simulate(circuit);

  json r;
  r["pattern"] = config.pattern.str();
  r["qubits"] = n;
  r["ancilla_qubits"] = circuit.ancilla_qubits();
  r["rotations"] = rotations;
  r["style"] = std::string(style_name(config.style));
  r["shots"] = config.shots;
  r["seed"] = config.seed;
  r["exact"] = probabilities(state, n);
  r["counts"] = json::object();
  if (config.shots > 0) r["counts"] = sample(state, config.shots, config.seed, n).counts;
  return r;
}

json analytic_report(std::size_t n, std::size_t max_k) {
  json r;
  r["qubits"] = n;
  r["rows"] = json::array();
  for (const auto& row : analytic::probability_table(n, max_k))
    r["rows"].push_back({{"k", row.k}, {"probability", row.probability}});
  return r;
}

json compare_report(const Pattern& pattern, std::size_t max_k, OracleStyle style,
                    std::uint64_t shots, std::uint64_t seed) {
  const std::size_t n = pattern.size();
  const auto derived = analytic::probability_table(n, max_k);
  json r;
  r["pattern"] = pattern.str();
  r["qubits"] = n;
  r["style"] = std::string(style_name(style));
  r["shots"] = shots;
  r["seed"] = seed;
  r["tolerance"] = kCompareTolerance;
  r["rows"] = json::array();
  bool passed = true;
  const std::size_t marked = pattern.index();
  for (const auto& row : derived) {
    const StateVector state = simulate(build_grover(pattern, row.k, style));
    const double exact = marginal_probabilities(state, n)[marked];
    const double deviation = std::abs(exact - row.probability);
    passed = passed && deviation <= kCompareTolerance;
    json line{{"k", row.k},
              {"derived", row.probability},
              {"exact", exact},
              {"exact_deviation", deviation},
              {"sampled", nullptr},
              {"sampled_deviation", nullptr}};
    if (shots > 0) {
      const Histogram h = sample(state, shots, seed, n);
      const auto it = h.counts.find(pattern.str());
      const double frequency =
          it == h.counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots);
      line["sampled"] = frequency;
      line["sampled_deviation"] = std::abs(frequency - row.probability);
    }
    r["rows"].push_back(std::move(line));
  }
  r["passed"] = passed;
  return r;
}

json phase_check_report(const Pattern& pattern, std::optional<OracleStyle> style) {
  const Circuit circuit = style ? build_phase_check(pattern, *style)
                                : build_phase_check(pattern, Circuit(pattern.size()));
  const auto distribution = probabilities(simulate(circuit), pattern.size());
  const PhaseVerdict v = judge_phase_check(distribution, pattern);
  json r;
  r["pattern"] = pattern.str();
  r["qubits"] = pattern.size();
  r["oracle"] = style ? std::string(style_name(*style)) : std::string("none");
  r["distribution"] = distribution;
  r["modal"] = v.modal;
  r["modal_probability"] = v.modal_probability;
  r["runner_up_probability"] = v.runner_up_probability;
  r["detected"] = v.detected;
  r["verdict"] = v.detected ? "phase flip detected" : "no phase flip detected";
  return r;
}

std::string render(const json& report, const std::string& command, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  if (command == "run") return render_run(report, format);
  if (command == "analytic") return render_analytic(report, format);
  if (command == "compare") return render_compare(report, format);
  if (command == "phase-check") return render_phase_check(report, format);
  throw ParameterError("no renderer for '" + command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ExportError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kResourceLimit;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace grovesim::cli
