// strathom command line: exact intersection homology of stratified
// simplicial pseudomanifolds, twisted coefficients, and the signed Euler
// characteristic witnesses.
//
// Exit codes: 0 success, 1 validation failure, 2 parse/usage error,
// 3 witness criterion inapplicable.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "strathom/catalog.hpp"
#include "strathom/io.hpp"

namespace {

using strathom::Cocycle;
using strathom::StratifiedComplex;
using strathom::Subdivision;
using json = strathom::io::json;

struct Options {
  std::string in_path;
  std::string cocycle_path;
  int n = 0;
  bool json_out = false;
  int subdivide = 0;
};

struct LoadedInput {
  StratifiedComplex complex;
  std::optional<Cocycle> cocycle;
  json envelope;
};

LoadedInput load(const Options& opt, const std::string& verb,
                 bool wants_cocycle) {
  const std::string text = strathom::io::read_file(opt.in_path);
  StratifiedComplex x = strathom::io::parse_complex(text);
  json envelope;
  envelope["format"] = "strathom-report v1";
  envelope["verb"] = verb;
  envelope["input"] = opt.in_path;
  envelope["input_hash"] = strathom::io::content_hash(text);

  std::optional<Cocycle> w;
  if (wants_cocycle) {
    const std::string ctext = strathom::io::read_file(opt.cocycle_path);
    envelope["cocycle"] = opt.cocycle_path;
    envelope["cocycle_hash"] = strathom::io::content_hash(ctext);
    w = strathom::io::parse_cocycle(ctext, x);
  }
  for (int k = 0; k < opt.subdivide; ++k) {
    Subdivision sd = strathom::barycentric_subdivision(x);
    if (w) w = strathom::subdivide_cocycle(x, sd, *w);
    x = std::move(sd.complex);
  }
  if (opt.subdivide > 0) envelope["subdivide"] = opt.subdivide;
  return LoadedInput{std::move(x), std::move(w), std::move(envelope)};
}

void print_json(json envelope, const json& payload) {
  for (const auto& [key, value] : payload.items()) envelope[key] = value;
  std::cout << envelope.dump() << "\n";
}

void print_groups(const std::string& symbol,
                  const strathom::HomologyReport& report) {
  for (size_t i = 0; i < report.groups.size(); ++i) {
    std::cout << symbol << "_" << i << ": rank " << report.groups[i].rank;
    if (!report.groups[i].torsion.empty()) {
      std::cout << ", torsion";
      for (const auto& t : report.groups[i].torsion)
        std::cout << " Z/" << strathom::to_string(t);
    }
    std::cout << "\n";
  }
}

void print_groups(const std::string& symbol,
                  const strathom::TwistedReport& report) {
  for (size_t i = 0; i < report.groups.size(); ++i) {
    std::cout << symbol << "_" << i << ": rank " << report.groups[i].rank;
    if (!report.groups[i].torsion.empty()) {
      std::cout << ", torsion";
      for (const auto& t : report.groups[i].torsion)
        std::cout << " (" << t.to_string() << ")";
    }
    std::cout << "\n";
  }
}

void print_euler(const strathom::EulerReport& euler) {
  std::cout << "Ichi = " << euler.ichi << ", chi = " << euler.chi
            << ", n = " << euler.n << "\n";
  std::cout << "(-1)^n * Ichi >= 0: " << (euler.signed_ih ? "pass" : "FAIL")
            << "\n";
  std::cout << "(-1)^n * chi  >= 0: " << (euler.signed_lci ? "pass" : "FAIL")
            << "\n";
}

int run_validate(const Options& opt) {
  const LoadedInput in = load(opt, "validate", false);
  const strathom::ValidationReport report = in.complex.validate();
  if (opt.json_out) {
    print_json(in.envelope, {{"validation", strathom::io::to_json(report)}});
  } else {
    for (const auto& [name, check] : report.items()) {
      std::cout << name << ": " << (check->ok ? "ok" : "FAIL");
      if (!check->ok) {
        std::cout << " (" << check->detail;
        if (check->witness) std::cout << " at " << check->witness->to_string();
        std::cout << ")";
      }
      std::cout << "\n";
    }
    std::cout << (report.ok() ? "valid" : "invalid: " + report.first_failure())
              << "\n";
  }
  return report.ok() ? 0 : 1;
}

int run_homology(const Options& opt) {
  const LoadedInput in = load(opt, "homology", false);
  const strathom::HomologyReport report =
      strathom::ordinary_homology(in.complex);
  if (opt.json_out)
    print_json(in.envelope, {{"homology", strathom::io::to_json(report)}});
  else
    print_groups("H", report);
  return 0;
}

int run_ih(const Options& opt) {
  const LoadedInput in = load(opt, "ih", false);
  const strathom::HomologyReport report =
      strathom::intersection_homology(in.complex);
  const strathom::EulerReport euler = strathom::euler_report(in.complex);
  if (opt.json_out) {
    print_json(in.envelope,
               {{"intersection_homology", strathom::io::to_json(report)},
                {"euler", strathom::io::to_json(euler)}});
  } else {
    print_groups("IH", report);
    print_euler(euler);
  }
  return 0;
}

int run_twisted(const Options& opt) {
  const LoadedInput in = load(opt, "twisted", true);
  const strathom::CocycleCheck check =
      strathom::validate_cocycle(in.complex, *in.cocycle);
  const strathom::TwistedReport report =
      strathom::twisted_intersection_homology(in.complex, *in.cocycle);
  if (opt.json_out) {
    print_json(in.envelope,
               {{"cocycle_check", strathom::io::to_json(check)},
                {"twisted_intersection_homology",
                 strathom::io::to_json(report)}});
  } else {
    std::cout << "cocycle: valid, "
              << (check.surjective ? "surjective" : "not surjective") << "\n";
    print_groups("IH", report);
  }
  return 0;
}

int run_witness(const Options& opt) {
  const LoadedInput in = load(opt, "witness", true);
  const strathom::WitnessReport report =
      strathom::euler_witness(in.complex, *in.cocycle, opt.n);
  if (opt.json_out) {
    print_json(in.envelope, {{"witness", strathom::io::to_json(report)}});
  } else {
    auto ranks = [](const std::vector<int>& v) {
      std::string s = "(";
      for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
      return s + ")";
    };
    std::cout << "twisted IH ranks " << ranks(report.ih_ranks)
              << ", twisted H ranks " << ranks(report.h_ranks) << ", n = "
              << report.n << "\n";
    if (report.ih_applicable)
      std::cout << "witness: Ichi = " << report.ichi << " = (-1)^" << report.n
                << " * " << report.ih_ranks[report.n] << "\n";
    else {
      std::cout << "criterion inapplicable: nonzero twisted ranks in degrees";
      for (int d : report.ih_offending) std::cout << " " << d;
      std::cout << "\n";
    }
  }
  return report.ih_applicable ? 0 : 3;
}

int run_crosscheck(const Options& opt) {
  const LoadedInput in = load(opt, "crosscheck", true);
  const strathom::CrosscheckResult result =
      strathom::cover_crosscheck(in.complex, *in.cocycle);
  if (opt.json_out)
    print_json(in.envelope, {{"crosscheck", strathom::io::to_json(result)}});
  else if (result.ok)
    std::cout << "crosscheck: ok (all degrees agree up to the gauge units)\n";
  else
    std::cout << "crosscheck: MISMATCH in degree " << result.degree << " at ("
              << result.row << "," << result.col << "): " << result.detail
              << "\n";
  return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "strathom: exact middle-perversity intersection homology of "
      "stratified simplicial pseudomanifolds"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_cocycle) {
    cmd->add_option("--in", opt.in_path, "complex file (strathom-complex v1)")
        ->required();
    cmd->add_flag("--json", opt.json_out, "machine-readable output");
    cmd->add_option("--subdivide", opt.subdivide,
                    "barycentrically subdivide k times before computing")
        ->check(CLI::NonNegativeNumber);
    if (with_cocycle)
      cmd->add_option("--cocycle", opt.cocycle_path,
                      "cocycle file (strathom-cocycle v1)")
          ->required();
  };

  auto* validate =
      app.add_subcommand("validate", "validation flags of a complex");
  add_common(validate, false);
  auto* homology =
      app.add_subcommand("homology", "ordinary simplicial homology");
  add_common(homology, false);
  auto* ih = app.add_subcommand(
      "ih", "intersection homology and the Euler characteristic verdicts");
  add_common(ih, false);
  auto* twisted = app.add_subcommand(
      "twisted", "twisted intersection homology over the Laurent ring");
  add_common(twisted, true);
  auto* witness = app.add_subcommand(
      "witness", "signed Euler characteristic witness from twisted ranks");
  add_common(witness, true);
  witness->add_option("--n", opt.n, "middle (complex) dimension")->required();
  auto* crosscheck = app.add_subcommand(
      "crosscheck",
      "compare the gauge-built and cover-built twisted boundaries");
  add_common(crosscheck, true);

  auto* cat = app.add_subcommand("catalog", "built-in model spaces");
  std::string action, entry_name, out_dir = ".";
  cat->add_option("action", action, "'list' or 'emit'")->required();
  cat->add_option("name", entry_name, "catalog entry name");
  cat->add_option("--out", out_dir, "output directory for emit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return run_validate(opt);
    if (homology->parsed()) return run_homology(opt);
    if (ih->parsed()) return run_ih(opt);
    if (twisted->parsed()) return run_twisted(opt);
    if (witness->parsed()) return run_witness(opt);
    if (crosscheck->parsed()) return run_crosscheck(opt);
    if (cat->parsed()) {
      if (action == "list") {
        for (const auto& name : strathom::catalog::names())
          std::cout << name << "\n";
        return 0;
      }
      if (action == "emit") {
        if (entry_name.empty()) {
          std::cerr << "catalog emit: missing entry name\n";
          return 2;
        }
        const auto entry = strathom::catalog::entry(entry_name);
        for (const auto& path :
             strathom::io::emit_catalog_entry(entry, out_dir))
          std::cout << path << "\n";
        return 0;
      }
      std::cerr << "catalog: unknown action '" << action << "'\n";
      return 2;
    }
  } catch (const strathom::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const strathom::ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
