// Command-line front end: decides realizability of candidate signature
// vectors, synthesizes witness systems, computes signatures of systems
// given as JSON files, dualizes, verifies, and enumerates achievable
// signatures at small n. Output is single-document JSON on stdout;
// human-readable notes go to stderr.
//
// Exit codes: 0 success / realizable / match, 1 negative verdict,
// 2 usage or parse error, 3 capacity exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sigkit/errors.hpp"
#include "sigkit/io.hpp"
#include "sigkit/realizability.hpp"
#include "sigkit/signature.hpp"
#include "sigkit/system.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct VectorOptions {
  std::string literal;
  bool as_counts = false;
  int expect_n = 0;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// Accepts either a system document or a verdict document carrying a
// witness, so `sigkit check ... | sigkit verify - ...` works directly.
sigkit::System load_system_or_witness(const std::string& path, bool strict) {
  std::string text = read_input(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("witness")) {
    if (!doc["witness"].is_object())
      throw std::invalid_argument("document has no witness system to verify");
    text = doc["witness"].dump();
  }
  sigkit::LoadedSystem loaded = sigkit::system_from_json(text, strict);
  if (loaded.minimized)
    std::cerr << "warning: input family was not an antichain; reduced to minimal members\n";
  return loaded.system;
}

std::vector<sigkit::BigRat> candidate_from_options(const VectorOptions& opts) {
  std::vector<sigkit::BigRat> entries = sigkit::parse_vector_literal(opts.literal);
  const int n = static_cast<int>(entries.size());
  if (opts.expect_n != 0 && opts.expect_n != n)
    throw std::invalid_argument("--n disagrees with the vector length");
  if (!opts.as_counts) return entries;

  // Count-vector mode: non-negative integers summing to n!.
  std::vector<sigkit::BigInt> counts;
  counts.reserve(entries.size());
  for (sigkit::BigRat& e : entries) {
    e.canonicalize();
    if (!sigkit::is_integral(e) || sgn(e) < 0)
      throw std::invalid_argument("--counts entries must be non-negative integers");
    counts.push_back(e.get_num());
  }
  const sigkit::CountVector vector(n, std::move(counts));  // validates the n! sum
  const sigkit::BigInt total = sigkit::factorial(static_cast<unsigned long>(n));
  std::vector<sigkit::BigRat> normalized;
  normalized.reserve(vector.counts().size());
  for (const sigkit::BigInt& c : vector.counts()) {
    sigkit::BigRat e(c, total);
    e.canonicalize();
    normalized.push_back(std::move(e));
  }
  return normalized;
}

sigkit::CountVector counts_from_candidate(const std::vector<sigkit::BigRat>& candidate) {
  return sigkit::SignatureVector(static_cast<int>(candidate.size()), candidate).to_counts();
}

int run_check(const VectorOptions& opts, bool emit_witness_only, bool verbose) {
  const std::vector<sigkit::BigRat> candidate = candidate_from_options(opts);
  const sigkit::RealizabilityVerdict verdict = sigkit::check_candidate(candidate);
  if (verdict.realizable && emit_witness_only) {
    std::cout << sigkit::system_to_json(sigkit::System(*verdict.witness)) << "\n";
  } else {
    std::cout << sigkit::verdict_to_json(verdict) << "\n";
  }
  if (verbose) {
    if (verdict.realizable) {
      std::cerr << "realizable; witness has " << verdict.witness->size()
                << " minimal cut sets\n";
    } else {
      std::cerr << "not realizable (stage: " << sigkit::to_string(verdict.violation->stage)
                << ")\n";
    }
  }
  return verdict.realizable ? kExitOk : kExitNegative;
}

int run_signature(const std::string& path, const std::string& method, bool strict,
                  bool verbose) {
  const sigkit::System system = load_system_or_witness(path, strict);
  sigkit::CountVector counts = [&] {
    if (method == "perm") return sigkit::signature_by_permutations(system);
    if (method == "ie") return sigkit::signature_inclusion_exclusion(system.minimal_cuts());
    return sigkit::signature_by_counting(system);
  }();
  std::cout << sigkit::signature_to_json(counts) << "\n";
  if (verbose)
    std::cerr << "signature of a " << system.n() << "-component system via method '" << method
              << "'\n";
  return kExitOk;
}

int run_dual(const std::string& path, bool strict, bool verbose) {
  const sigkit::System system = load_system_or_witness(path, strict);
  const sigkit::System dual = sigkit::dualize(system);
  std::cout << sigkit::system_to_json(dual) << "\n";
  if (verbose)
    std::cerr << system.minimal_cuts().size() << " minimal cuts -> "
              << dual.minimal_cuts().size() << " minimal cuts in the dual\n";
  return kExitOk;
}

int run_verify(const std::string& path, const VectorOptions& opts, bool strict, bool verbose) {
  const sigkit::System system = load_system_or_witness(path, strict);
  const sigkit::CountVector expected = counts_from_candidate(candidate_from_options(opts));
  if (expected.n() != system.n())
    throw std::invalid_argument("vector length does not match the system size");
  const sigkit::CountVector actual = sigkit::signature_by_counting(system);
  std::cout << sigkit::verify_to_json(expected, actual) << "\n";
  const bool match = expected == actual;
  if (verbose) std::cerr << (match ? "signatures match\n" : "signatures differ\n");
  return match ? kExitOk : kExitNegative;
}

int run_enumerate(int n, bool verbose) {
  const std::vector<sigkit::CountVector> achievable = sigkit::enumerate_achievable(n);
  for (const sigkit::CountVector& counts : achievable) {
    const sigkit::AntichainFamily witness =
        sigkit::synthesize(sigkit::SignatureVector::from_counts(counts));
    std::cout << sigkit::achievable_record_to_json(counts, sigkit::System(witness)) << "\n";
  }
  if (verbose)
    std::cerr << achievable.size() << " achievable signatures at n = " << n << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for coherent-system signatures"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "Human-readable summary on stderr");

  VectorOptions check_vec;
  auto* check = app.add_subcommand(
      "check", "Decide whether a probability vector is a system signature");
  check->add_option("vector", check_vec.literal, "Comma-separated entries (int, p/q, decimal)")
      ->required();
  check->add_flag("--counts", check_vec.as_counts, "Entries are unnormalized counts summing to n!");
  check->add_option("--n", check_vec.expect_n, "Expected vector length (validation only)");

  VectorOptions synth_vec;
  auto* synth = app.add_subcommand(
      "synthesize", "Emit a witness system for a realizable vector");
  synth->add_option("vector", synth_vec.literal, "Comma-separated entries")->required();
  synth->add_flag("--counts", synth_vec.as_counts, "Entries are unnormalized counts");
  synth->add_option("--n", synth_vec.expect_n, "Expected vector length (validation only)");

  std::string sig_file, sig_method = "count";
  bool sig_strict = false;
  auto* sig = app.add_subcommand("signature", "Compute the signature of a system file");
  sig->add_option("file", sig_file, "System JSON file ('-' for stdin)")->required();
  sig->add_option("--method", sig_method, "count (default), ie, or perm")
      ->check(CLI::IsMember({"count", "ie", "perm"}));
  sig->add_flag("--strict", sig_strict, "Reject non-antichain input instead of reducing");

  std::string dual_file;
  bool dual_strict = false;
  auto* dual = app.add_subcommand("dual", "Compute the dual system");
  dual->add_option("file", dual_file, "System JSON file ('-' for stdin)")->required();
  dual->add_flag("--strict", dual_strict, "Reject non-antichain input instead of reducing");

  std::string verify_file;
  VectorOptions verify_vec;
  bool verify_strict = false;
  auto* verify = app.add_subcommand(
      "verify", "Check that a system (or check verdict) has the given signature");
  verify->add_option("file", verify_file, "System or verdict JSON ('-' for stdin)")->required();
  verify->add_option("vector", verify_vec.literal, "Expected signature")->required();
  verify->add_flag("--counts", verify_vec.as_counts, "Entries are unnormalized counts");
  verify->add_option("--n", verify_vec.expect_n, "Expected vector length (validation only)");
  verify->add_flag("--strict", verify_strict, "Reject non-antichain input instead of reducing");

  int enum_n = 0;
  auto* enumerate = app.add_subcommand(
      "enumerate", "Stream all achievable count vectors with canonical witnesses");
  enumerate->add_option("n", enum_n, "Number of components (1..5)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return run_check(check_vec, false, verbose);
    if (*synth) return run_check(synth_vec, true, verbose);
    if (*sig) return run_signature(sig_file, sig_method, sig_strict, verbose);
    if (*dual) return run_dual(dual_file, dual_strict, verbose);
    if (*verify) return run_verify(verify_file, verify_vec, verify_strict, verbose);
    if (*enumerate) return run_enumerate(enum_n, verbose);
  } catch (const sigkit::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
