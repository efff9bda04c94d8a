#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "localdeg/error.hpp"
#include "localdeg/suites.hpp"

namespace {

using namespace localdeg;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint64_t cap_bits = kDefaultCapBits;
  bool timing = false;

  std::string target;
  std::uint32_t p = 3, q = 7, m = 1;
  std::optional<std::size_t> samples;
  std::string group;
  std::vector<std::size_t> cyclic{2, 2, 3};
  std::size_t max_factor_order = 8;
  std::uint64_t b = 2, n = 1, d = 2;
  std::uint64_t prime_bound = KummerOptions{}.prime_bound;
};

Report run_verify(const Options& o) {
  if (o.target == "extraspecial") return suite_extraspecial(o.p, o.m);
  if (o.target == "module") return suite_module(o.p, o.q, o.m, o.samples.value_or(100), o.seed);
  if (o.target == "semidirect") return suite_semidirect(o.p, o.q, o.m, o.samples.value_or(1000), o.seed);
  if (o.target == "abelian-witness") return suite_abelian_witness(o.group, o.cyclic);
  if (o.target == "product-quotient") return suite_product_quotient(o.max_factor_order);
  return suite_kummer_formal(o.m, o.seed);
}

Report run_bounds(const Options& o) {
  if (o.target == "derived") return bounds_derived(o.b, o.n, o.cap_bits);
  if (o.target == "abelian") return bounds_abelian(o.b, o.cap_bits);
  if (o.target == "pq") return bounds_pq(o.p, o.q, o.cap_bits);
  if (o.target == "factorial") return bounds_factorial(o.b);
  return bounds_local_count(o.p, o.d);
}

Report run_realize(const Options& o) {
  if (o.target == "kummer") {
    KummerOptions k;
    k.prime_bound = o.prime_bound;
    return realize_kummer(o.m, o.seed, k);
  }
  return realize_embedding(o.p, o.q, o.m, o.samples.value_or(100), o.seed);
}

void print_error(const Options& o, const std::string& code, const std::string& message, const std::string& note) {
  if (o.format == "json") {
    Json j;
    j["error"] = code;
    j["message"] = message;
    if (!note.empty()) j["note"] = note;
    std::cout << j.dump(2) << '\n';
  }
  std::cerr << "error: " << message << '\n';
  if (!note.empty()) std::cerr << note << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Finite group, module and radical-tower verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for every sampled check");
  app.add_option("--cap-bits", o.cap_bits, "Largest bound evaluated exactly, in bits");
  app.add_flag("--timing", o.timing, "Include elapsed_ms in the report");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("target", o.target)
      ->required()
      ->check(CLI::IsMember(
          {"extraspecial", "module", "semidirect", "abelian-witness", "product-quotient", "kummer-formal"}));
  verify->add_option("--p", o.p, "Prime p (complement / extraspecial group)");
  verify->add_option("--q", o.q, "Prime q (field of the module)");
  verify->add_option("--m", o.m, "Rank m: the extraspecial group has order p^(2m+1)");
  verify->add_option("--samples", o.samples, "Number of random samples");
  verify->add_option("--group", o.group, "Catalogue group for abelian-witness (C1 ... Q8)");
  verify->add_option("--cyclic", o.cyclic, "Cyclic factor orders for abelian-witness")->delimiter(',');
  verify->add_option("--max-factor-order", o.max_factor_order, "Largest factor order in the product scan");

  auto* bounds = app.add_subcommand("bounds", "Evaluate a bound formula");
  bounds->add_option("kind", o.target)
      ->required()
      ->check(CLI::IsMember({"derived", "abelian", "pq", "factorial", "local-count"}));
  bounds->add_option("--b", o.b, "Exponent bound b (or B for factorial)");
  bounds->add_option("--n", o.n, "Derived length n");
  bounds->add_option("--p", o.p, "Prime p");
  bounds->add_option("--q", o.q, "Prime q");
  bounds->add_option("--d", o.d, "Largest extension degree (1..3)");

  auto* realize = app.add_subcommand("realize", "Emit a radical tower or an embedding plan");
  realize->add_option("what", o.target)->required()->check(CLI::IsMember({"kummer", "embedding"}));
  realize->add_option("--m", o.m, "Number of levels / rank m");
  realize->add_option("--p", o.p, "Prime p");
  realize->add_option("--q", o.q, "Prime q");
  realize->add_option("--samples", o.samples, "Number of random samples");
  realize->add_option("--prime-bound", o.prime_bound, "Largest prime tried in parameter searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    if (verify->parsed()) {
      r = run_verify(o);
    } else if (bounds->parsed()) {
      r = run_bounds(o);
    } else {
      r = run_realize(o);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::SearchExhausted) {
      print_error(o, std::string(errc_name(e.code())), e.what(),
                  "search state: no admissible prime up to --prime-bound " + std::to_string(o.prime_bound) +
                      "; rerun with a larger bound to resume");
      return 1;
    }
    print_error(o, std::string(errc_name(e.code())), e.what(), "");
    return 2;
  } catch (const std::exception& e) {
    print_error(o, "InternalError", std::string("InternalError: ") + e.what(), "");
    return 1;
  }
  if (o.timing) {
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
  }

  if (o.format == "json") {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    std::cout << to_text(r);
  }
  return r.exit_code();
}
