// gf2e: command line front end for the matrix library.
//
// Exit codes: 0 success, 1 computation or self-test failure, 2 usage error
// (bad flags, unreadable or malformed input, mismatched operands).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gf2e/counters.hpp"
#include "gf2e/matrix_io.hpp"
#include "gf2e/newton_john.hpp"
#include "gf2e/ple.hpp"
#include "gf2e/poly_mul.hpp"
#include "gf2e/random.hpp"
#include "gf2e/sliced_matrix.hpp"
#include "gf2e/tuning.hpp"

namespace {

using namespace gf2e;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Raised for problems with the caller's input rather than the computation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MatrixFile load(const std::string& path) {
  try {
    return read_matrix_file(path);
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
}

std::string format_counters(const OpCounters& c) {
  std::ostringstream os;
  os << "counts gf2_muls=" << c.gf2_muls << " gf2_adds=" << c.gf2_adds << " table_scalar_rows=" << c.table_scalar_rows
     << " table_row_adds=" << c.table_row_adds << " tables_built=" << c.tables_built
     << " temp_high_water=" << c.temp_high_water;
  return os.str();
}

void check_degree(int e) {
  if (e < kMinDegree || e > kMaxDegree) {
    throw UsageError("degree must be in " + std::to_string(kMinDegree) + ".." + std::to_string(kMaxDegree));
  }
}

// ---- mul ----------------------------------------------------------------

struct MulArgs {
  std::string a, b, out;
  std::string backend = "strassen";
  std::size_t crossover = 0;
  bool counts = false;
};

int cmd_mul(const MulArgs& args) {
  const MulBackend backend = parse_backend(args.backend);
  const MatrixFile a = load(args.a);
  const MatrixFile b = load(args.b);
  if (a.matrix.degree() != b.matrix.degree() || a.matrix.field().modulus() != b.matrix.field().modulus()) {
    throw UsageError("operands are defined over different fields");
  }
  if (a.matrix.cols() != b.matrix.rows()) {
    throw UsageError("cannot multiply " + std::to_string(a.matrix.rows()) + "x" + std::to_string(a.matrix.cols()) +
                     " by " + std::to_string(b.matrix.rows()) + "x" + std::to_string(b.matrix.cols()));
  }
  op_counters().reset();
  const PackedMatrix c = multiply(a.matrix, b.matrix, backend, args.crossover);
  const OpCounters counts = op_counters();
  write_matrix_file(args.out, c, a.repr);
  if (args.counts) std::cerr << format_counters(counts) << '\n';
  return kOk;
}

// ---- echelonize ---------------------------------------------------------

struct EchelonArgs {
  std::string in, out;
  bool full = false;
  std::string backend = "ple";
  std::size_t crossover = 0;
};

int cmd_echelonize(const EchelonArgs& args) {
  MatrixFile a = load(args.in);
  std::size_t rank = 0;
  if (args.backend == "nj") {
    rank = nj_gauss(a.matrix, args.full);
  } else if (args.backend == "ple") {
    rank = echelonize(a.matrix, args.full, args.crossover);
  } else {
    throw UsageError("echelonize backend must be nj or ple");
  }
  write_matrix_file(args.out, a.matrix, a.repr);
  std::cout << "rank=" << rank << '\n';
  return kOk;
}

// ---- random -------------------------------------------------------------

struct RandomArgs {
  int e = 0;
  std::size_t m = 0, n = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string repr = "packed";
};

int cmd_random(const RandomArgs& args) {
  check_degree(args.e);
  Rng rng(args.seed);
  const PackedMatrix a = PackedMatrix::random(default_field(args.e), args.m, args.n, rng);
  write_matrix_file(args.out, a, args.repr == "sliced" ? Repr::kSliced : Repr::kPacked);
  return kOk;
}

// ---- selftest -----------------------------------------------------------

struct SelftestArgs {
  std::vector<int> degrees;
  std::vector<std::size_t> sizes{1, 17, 64, 65, 130};
  int iters = 3;
  std::uint64_t seed = 1;
  std::string counterexample = "selftest_counterexample.mat";
};

struct Counterexample {
  std::string check;
  std::vector<PackedMatrix> inputs;
};

// One self-test: returns the offending inputs on failure.
using Check = std::function<std::optional<Counterexample>(const FieldPtr&, std::size_t, Rng&)>;

std::vector<std::pair<std::string, Check>> self_checks() {
  std::vector<std::pair<std::string, Check>> checks;
  checks.emplace_back("backend-equivalence", [](const FieldPtr& field, std::size_t n, Rng& rng) -> std::optional<Counterexample> {
    const PackedMatrix a = PackedMatrix::random(field, n, n + 3, rng);
    const PackedMatrix b = PackedMatrix::random(field, n + 3, n + 1, rng);
    const PackedMatrix ref = cubic_mul(a, b);
    for (auto backend : {MulBackend::kNewtonJohn, MulBackend::kStrassen, MulBackend::kKaratsuba}) {
      if (multiply(a, b, backend, 16) != ref) {
        return Counterexample{"backend-equivalence/" + std::string(backend_name(backend)), {a, b}};
      }
    }
    return std::nullopt;
  });
  checks.emplace_back("ple-reconstruction", [](const FieldPtr& field, std::size_t n, Rng& rng) -> std::optional<Counterexample> {
    // rank-deficient input: product of thin factors
    const std::size_t r = rng.below(n + 1);
    const PackedMatrix a = nj_mul(PackedMatrix::random(field, n + 2, r, rng), PackedMatrix::random(field, r, n, rng));
    for (std::size_t crossover : {std::size_t{16}, kNoCrossover}) {
      PackedMatrix work = a;
      const PleFactors f = ple(work, crossover);
      auto [l, e] = unpack_ple(work, f);
      PackedMatrix back = f.rank ? cubic_mul(l, e) : PackedMatrix(field, a.rows(), a.cols());
      apply_perm_rows(back, f.p, PermDirection::kBackward);
      if (back != a) return Counterexample{"ple-reconstruction", {a}};
    }
    return std::nullopt;
  });
  checks.emplace_back("trsm-identity", [](const FieldPtr& field, std::size_t n, Rng& rng) -> std::optional<Counterexample> {
    PackedMatrix u = PackedMatrix::random(field, n, n, rng);
    PackedMatrix l = PackedMatrix::random(field, n, n, rng);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) u.put(i, j, 0);
      for (std::size_t j = i + 1; j < n; ++j) l.put(i, j, 0);
      u.put(i, i, static_cast<Element>(rng.between(1, field->order() - 1)));
      l.put(i, i, static_cast<Element>(rng.between(1, field->order() - 1)));
    }
    const PackedMatrix b = PackedMatrix::random(field, n, 7, rng);
    PackedMatrix x = b;
    trsm_upper_left(u, x, 16);
    if (cubic_mul(u, x) != b) return Counterexample{"trsm-identity/upper", {u, b}};
    x = b;
    trsm_lower_left(l, x, 16);
    if (cubic_mul(l, x) != b) return Counterexample{"trsm-identity/lower", {l, b}};
    return std::nullopt;
  });
  checks.emplace_back("slice-cling", [](const FieldPtr& field, std::size_t n, Rng& rng) -> std::optional<Counterexample> {
    const PackedMatrix a = PackedMatrix::random(field, n, n + 5, rng);
    if (cling(slice(a)) != a) return Counterexample{"slice-cling", {a}};
    return std::nullopt;
  });
  checks.emplace_back("table-counts", [](const FieldPtr& field, std::size_t n, Rng& rng) -> std::optional<Counterexample> {
    const PackedMatrix a = PackedMatrix::random(field, 1, n, rng);
    auto& c = op_counters();
    c.reset();
    const NjTable t = make_table(a, 0);
    const auto e = static_cast<std::uint64_t>(field->degree());
    bool ok = c.table_scalar_rows == e && c.table_row_adds == (std::uint64_t{1} << e) - 1;
    for (Element x = 0; ok && x < field->order(); ++x) {
      for (std::size_t j = 0; j < n; ++j) ok = ok && t.rows().at(x, j) == field->mul(x, a.at(0, j));
    }
    if (!ok) return Counterexample{"table-counts", {a}};
    return std::nullopt;
  });
  return checks;
}

int cmd_selftest(SelftestArgs args) {
  if (args.degrees.empty()) {
    for (int e = kMinDegree; e <= kMaxDegree; ++e) args.degrees.push_back(e);
  }
  for (int e : args.degrees) check_degree(e);
  if (args.iters < 1) throw UsageError("--iters must be positive");
  Rng rng(args.seed);
  std::size_t runs = 0;
  for (const auto& [name, check] : self_checks()) {
    for (int e : args.degrees) {
      const FieldPtr field = default_field(e);
      for (std::size_t n : args.sizes) {
        for (int it = 0; it < args.iters; ++it) {
          ++runs;
          if (auto bad = check(field, n, rng)) {
            std::cerr << "selftest FAILED: " << bad->check << " e=" << e << " n=" << n << " iter=" << it << '\n';
            for (std::size_t k = 0; k < bad->inputs.size(); ++k) {
              const std::string path = k == 0 ? args.counterexample : args.counterexample + "." + std::to_string(k);
              write_matrix_file(path, bad->inputs[k]);
              std::cerr << "counterexample written to " << path << '\n';
            }
            return kFailure;
          }
        }
      }
    }
    std::cout << "selftest " << name << " ok\n";
  }
  std::cout << "selftest passed (" << runs << " runs)\n";
  return kOk;
}

// ---- bench --------------------------------------------------------------

struct BenchArgs {
  std::string op;
  int e = 0;
  std::size_t n = 0;
  int reps = 3;
  std::string backend = "karatsuba";
  std::size_t crossover = 0;
  std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs& args) {
  check_degree(args.e);
  if (args.reps < 1) throw UsageError("--reps must be positive");
  const FieldPtr field = default_field(args.e);
  Rng rng(args.seed);
  const PackedMatrix a = PackedMatrix::random(field, args.n, args.n, rng);
  const PackedMatrix b = PackedMatrix::random(field, args.n, args.n, rng);

  std::function<void()> run;
  if (args.op == "mul") {
    const MulBackend backend = parse_backend(args.backend);
    run = [&, backend] { (void)multiply(a, b, backend, args.crossover); };
  } else if (args.op == "ple") {
    run = [&] {
      PackedMatrix w = a;
      (void)ple(w, args.crossover);
    };
  } else if (args.op == "echelonize") {
    run = [&] {
      PackedMatrix w = a;
      (void)echelonize(w, true, args.crossover);
    };
  } else if (args.op == "trsm") {
    PackedMatrix u = a;
    for (std::size_t i = 0; i < args.n; ++i) {
      for (std::size_t j = 0; j < i; ++j) u.put(i, j, 0);
      u.put(i, i, 1);
    }
    run = [&, u] {
      PackedMatrix x = b;
      trsm_upper_left(u, x, args.crossover);
    };
  } else {
    throw UsageError("unknown bench op '" + args.op + "' (mul, ple, echelonize, trsm)");
  }

  std::vector<double> times;
  OpCounters counts;
  for (int r = 0; r < args.reps; ++r) {
    op_counters().reset();
    const auto t0 = std::chrono::steady_clock::now();
    run();
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    counts = op_counters();
  }
  std::sort(times.begin(), times.end());
  char median[32];
  std::snprintf(median, sizeof(median), "%.6f", times[times.size() / 2]);
  std::cout << "bench op=" << args.op << " e=" << args.e << " n=" << args.n << " reps=" << args.reps
            << " median_s=" << median << " gf2_muls=" << counts.gf2_muls << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense linear algebra over GF(2^e), 2 <= e <= 10"};
  app.require_subcommand(1);
  const std::size_t default_crossover = tuning().crossover;  // honours GF2E_CROSSOVER

  MulArgs mul_args;
  mul_args.crossover = default_crossover;
  auto* mul = app.add_subcommand("mul", "Multiply two matrix files");
  mul->add_option("a", mul_args.a, "Left operand")->required();
  mul->add_option("b", mul_args.b, "Right operand")->required();
  mul->add_option("out", mul_args.out, "Output file")->required();
  mul->add_option("--backend", mul_args.backend, "cubic, nj, strassen or karatsuba")
      ->check(CLI::IsMember({"cubic", "nj", "strassen", "karatsuba", "auto"}));
  mul->add_option("--crossover", mul_args.crossover, "Strassen base-case size")->check(CLI::PositiveNumber);
  mul->add_flag("--counts", mul_args.counts, "Print operation counters to stderr");

  EchelonArgs ech_args;
  ech_args.crossover = default_crossover;
  auto* ech = app.add_subcommand("echelonize", "Row echelon form of a matrix file; prints rank=<r>");
  ech->add_option("in", ech_args.in, "Input file")->required();
  ech->add_option("out", ech_args.out, "Output file")->required();
  ech->add_flag("--full", ech_args.full, "Reduced row echelon form");
  ech->add_option("--backend", ech_args.backend, "nj or ple")->check(CLI::IsMember({"nj", "ple"}));
  ech->add_option("--crossover", ech_args.crossover, "Recursion base-case size")->check(CLI::PositiveNumber);

  RandomArgs rnd_args;
  auto* rnd = app.add_subcommand("random", "Write a uniformly random matrix");
  rnd->add_option("e", rnd_args.e, "Extension degree")->required();
  rnd->add_option("m", rnd_args.m, "Rows")->required();
  rnd->add_option("n", rnd_args.n, "Columns")->required();
  rnd->add_option("seed", rnd_args.seed, "Generator seed")->required();
  rnd->add_option("out", rnd_args.out, "Output file")->required();
  rnd->add_option("--repr", rnd_args.repr, "Header repr tag")->check(CLI::IsMember({"packed", "sliced"}));

  SelftestArgs st_args;
  auto* st = app.add_subcommand("selftest", "Run the built-in consistency checks");
  st->add_option("--e", st_args.degrees, "Degrees to test (default: all)")->delimiter(',');
  st->add_option("--sizes", st_args.sizes, "Matrix sizes")->delimiter(',');
  st->add_option("--iters", st_args.iters, "Instances per degree and size");
  st->add_option("--seed", st_args.seed, "Generator seed");
  st->add_option("--counterexample", st_args.counterexample, "Where to write the first failing input");

  BenchArgs bench_args;
  bench_args.crossover = default_crossover;
  auto* bench = app.add_subcommand("bench", "Time one operation on random n x n inputs");
  bench->add_option("op", bench_args.op, "mul, ple, echelonize or trsm")->required();
  bench->add_option("e", bench_args.e, "Extension degree")->required();
  bench->add_option("n", bench_args.n, "Dimension")->required();
  bench->add_option("--reps", bench_args.reps, "Repetitions (median reported)");
  bench->add_option("--backend", bench_args.backend, "Backend for op=mul")
      ->check(CLI::IsMember({"cubic", "nj", "strassen", "karatsuba", "auto"}));
  bench->add_option("--crossover", bench_args.crossover, "Recursion base-case size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*mul) return cmd_mul(mul_args);
    if (*ech) return cmd_echelonize(ech_args);
    if (*rnd) return cmd_random(rnd_args);
    if (*st) return cmd_selftest(st_args);
    if (*bench) return cmd_bench(bench_args);
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
