// Command-line driver: expansions, convergence tables, TMW diagnostics and the
// invariant self-test.
//
// Exit codes: 0 success, 2 usage or precondition violation, 3 numerical
// degradation (analyticity lost, self-test invariant failed).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "blaschke/io.hpp"
#include "blaschke/selftest.hpp"

namespace {

using namespace blaschke;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

Eigen::Index default_samples() {
  if (const char* env = std::getenv("BLASCHKE_SAMPLES")) {
    try {
      return Eigen::Index(parse::parse_integer(env));
    } catch (const PreconditionError&) {
      throw PreconditionError(std::string("BLASCHKE_SAMPLES: not an integer '") + env + "'");
    }
  }
  return kDefaultSampleCount;
}

/// Re-raises a precondition failure with the name of the flag that caused it.
template <typename F>
auto for_flag(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    throw PreconditionError(flag + ": " + e.what());
  }
}

struct Output {
  std::string path;
  std::string command;
  Eigen::Index samples = 0;

  void emit(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      return;
    }
    io::write_atomic(path, content);
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    const json meta{{"command", command},
                    {"sample_count", samples},
                    {"unix_time", std::chrono::duration_cast<std::chrono::seconds>(now).count()}};
    io::write_atomic(path + ".meta.json", meta.dump(2) + "\n");
  }
};

struct SeriesOptions {
  std::string func;
  std::string seq = "harmonic-shifted";
  std::size_t nterms = 32;
  std::optional<Eigen::Index> samples;
  std::string out;
};

void add_series_options(CLI::App* cmd, SeriesOptions& o) {
  cmd->add_option("--func", o.func, "poly:a0,a1,... | kernel:z | blaschke:z1;z2 | ratgeo:c | file:<path>")->required();
  cmd->add_option("--seq", o.seq, "harmonic[:theta] | harmonic-shifted | geometric:q | explicit:[z1,...]");
  cmd->add_option("--nterms", o.nterms, "number of expansion terms N");
  cmd->add_option("--samples", o.samples, "boundary sample count M (power of two)");
  cmd->add_option("--out", o.out, "output path (stdout when omitted)");
}

int run_expand(const SeriesOptions& o, const std::string& command) {
  const Eigen::Index m = o.samples.value_or(default_samples());
  const auto parsed = for_flag("--func", [&] { return io::parse_function(o.func, m); });
  const auto seq = for_flag("--seq", [&] { return make_sequence<double>(o.seq, o.nterms); });
  if (seq.kind == SequenceKind::Blaschke) throw PreconditionError("--seq: expansion needs a non-Blaschke sequence, got " + seq.generator_tag);
  const auto result = expansion_coefficients(parsed.function, seq, o.nterms, parsed.description);
  Output{o.out, command, m}.emit(io::to_json(result).dump(2) + "\n");
  return kExitOk;
}

int run_convergence(const SeriesOptions& o, const std::string& norms_text, const std::string& bound,
                    const std::string& command) {
  const Eigen::Index m = o.samples.value_or(default_samples());
  const auto parsed = for_flag("--func", [&] { return io::parse_function(o.func, m); });
  const auto seq = for_flag("--seq", [&] { return make_sequence<double>(o.seq, o.nterms); });
  if (seq.kind == SequenceKind::Blaschke) throw PreconditionError("--seq: expansion needs a non-Blaschke sequence, got " + seq.generator_tag);
  const auto norms = for_flag("--norms", [&] {
    std::vector<NormSpec> out;
    for (auto item : parse::split(norms_text, ',')) out.push_back(NormSpec::parse(item));
    return out;
  });
  std::optional<DiskPointd> alpha;
  if (!bound.empty()) {
    if (bound != "kernel") throw PreconditionError("--bound: only 'kernel' is supported");
    if (!parsed.kernel_alpha) throw PreconditionError("--bound kernel: --func must be kernel:z or ratgeo:c");
    alpha = parsed.kernel_alpha;
  }
  const auto table = convergence_study(parsed.function, seq, o.nterms, norms, alpha);
  Output{o.out, command, m}.emit(io::to_csv(table));
  if (!table.domination_holds) {
    std::cerr << "warning: a norm column exceeded the sup column\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int run_selftest(std::optional<Eigen::Index> samples, const std::string& filter) {
  const Eigen::Index m = samples.value_or(default_samples());
  const auto results = blaschke::run_selftest(m, filter);
  if (results.empty()) throw PreconditionError("--filter: no invariants for module '" + filter + "'");
  const InvariantResult* first_failure = nullptr;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name << " -- " << r.detail << "\n";
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    std::cerr << "first failing invariant: " << first_failure->module << ": " << first_failure->name << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expansions of analytic functions in finite Blaschke products"};
  app.require_subcommand(1);
  std::string command;
  for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);

  SeriesOptions expand_opts;
  auto* expand = app.add_subcommand("expand", "expansion coefficients and residuals as JSON");
  add_series_options(expand, expand_opts);

  SeriesOptions conv_opts;
  std::string norms_text = "sup";
  std::string bound;
  auto* conv = app.add_subcommand("convergence", "residual norms per n as CSV");
  add_series_options(conv, conv_opts);
  conv->add_option("--norms", norms_text, "comma list of sup | hardy:p | bergman:p:alpha[:nodes]");
  conv->add_option("--bound", bound, "'kernel': add the kernel remainder bound column");

  auto* tmw = app.add_subcommand("tmw", "Takenaka-Malmquist-Walsh diagnostics");
  tmw->require_subcommand(1);
  std::string tmw_seq;
  std::optional<Eigen::Index> tmw_samples;
  std::string tmw_out;
  auto add_tmw_common = [&](CLI::App* cmd) {
    cmd->add_option("--seq", tmw_seq, "point sequence spec")->required();
    cmd->add_option("--samples", tmw_samples, "boundary sample count M");
    cmd->add_option("--out", tmw_out, "output path (stdout when omitted)");
  };
  std::size_t gram_k = 12;
  auto* gram = tmw->add_subcommand("gram", "Gram matrix of the first K elements");
  add_tmw_common(gram);
  gram->add_option("--k", gram_k, "number of elements")->required();
  std::size_t fn_n = 1;
  std::optional<std::size_t> fn_end;
  auto* functional = tmw->add_subcommand("functional", "norm of f -> (T_{conj(B_{N-1})} f)(lambda_N)");
  add_tmw_common(functional);
  functional->add_option("--n", fn_n, "index N")->required();
  functional->add_option("--n-end", fn_end, "report every N from --n to this index");
  std::string support = "pow2";
  std::size_t kmax = 32;
  double exponent = 0.25;
  auto* witness = tmw->add_subcommand("witness", "lacunary H^2 function with growing functional values");
  add_tmw_common(witness);
  witness->add_option("--support", support, "pow2 | list:n1,n2,...");
  witness->add_option("--kmax", kmax, "largest index K");
  witness->add_option("--exponent", exponent, "c_n = n^-exponent");

  std::optional<Eigen::Index> self_samples;
  std::string filter;
  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->add_option("--samples", self_samples, "boundary sample count M");
  selftest->add_option("--filter", filter, "module name: fnspace | blaschke | toeplitz | schauder | tmw | norms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (expand->parsed()) return run_expand(expand_opts, command);
    if (conv->parsed()) return run_convergence(conv_opts, norms_text, bound, command);
    if (selftest->parsed()) return run_selftest(self_samples, filter);
    if (tmw->parsed()) {
      const Eigen::Index m = tmw_samples.value_or(default_samples());
      Output out{tmw_out, command, m};
      if (gram->parsed()) {
        const auto seq = for_flag("--seq", [&] { return make_sequence<double>(tmw_seq, gram_k); });
        out.emit(io::gram_to_json(gram_matrix(seq, gram_k, m), m).dump(2) + "\n");
      } else if (functional->parsed()) {
        const std::size_t last = fn_end.value_or(fn_n);
        if (last < fn_n) throw PreconditionError("--n-end: must be >= --n");
        const auto seq = for_flag("--seq", [&] { return make_sequence<double>(tmw_seq, last); });
        json records = json::array();
        for (std::size_t n = fn_n; n <= last; ++n) {
          records.push_back(io::to_json(functional_norm(seq, n, m), n, seq.lambda(n).value()));
        }
        out.emit((fn_end ? records : records.front()).dump(2) + "\n");
      } else if (witness->parsed()) {
        const auto seq = for_flag("--seq", [&] { return make_sequence<double>(tmw_seq, kmax); });
        const auto indices = for_flag("--support", [&] { return lacunary_support(support, kmax); });
        const auto report = for_flag("--seq", [&] { return lacunary_witness(seq, kmax, exponent, indices, m); });
        out.emit(io::to_json(report).dump(2) + "\n");
      }
      return kExitOk;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AnalyticityError& e) {
    std::cerr << "numerical degradation: " << e.what() << "\n"
              << "hint: the boundary data is under-resolved; raise --samples\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
