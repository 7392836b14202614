#include "ssfem/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssfem/errors.hpp"
#include "ssfem/report_io.hpp"
#include "ssfem/verify.hpp"

namespace ssfem::cli {

namespace {

struct Outcome {
  std::string report;
  int code = kExitPass;
};

SmoothnessProfile resolve_profile(const RunConfig& c) {
  if (!c.profile && !c.degree) return family_profile(c.dim, c.smoothness);
  std::vector<int> orders;
  if (c.profile) {
    orders = *c.profile;
    if (static_cast<int>(orders.size()) != c.dim) {
      throw InvalidConfiguration("--profile needs " + std::to_string(c.dim) + " orders, got " +
                                 std::to_string(orders.size()));
    }
  } else {
    orders = family_profile(c.dim, c.smoothness).orders();
  }
  const int degree = c.degree ? *c.degree : family_profile(c.dim, c.smoothness).degree();
  return SmoothnessProfile(c.dim, std::move(orders), degree);
}

// m for commands that only make sense on the family element.
int family_member(const RunConfig& c, const SmoothnessProfile& profile) {
  if (auto m = profile.family_smoothness()) return *m;
  throw Unsupported(c.command + " needs a profile of the form r_d = 2^(n-1-d) m with degree 2^n m + 1; " +
                    profile.to_string() + " is not one (try `partition`)");
}

std::size_t size_cap() {
  const char* env = std::getenv("SSFEM_CAP");
  if (!env || !*env) return kDefaultCap;
  try {
    std::size_t pos = 0;
    const unsigned long long cap = std::stoull(env, &pos);
    if (pos == std::string(env).size() && cap > 0) return static_cast<std::size_t>(cap);
  } catch (const std::exception&) {
  }
  throw InvalidArgument(std::string("SSFEM_CAP must be a positive integer, got '") + env + "'");
}

std::string render(const CountTable& table, Format format) {
  switch (format) {
    case Format::json: return to_json(table);
    case Format::csv: return to_csv(table);
    case Format::text: break;
  }
  return to_text(table);
}

Outcome run_count(const RunConfig& c) {
  const SmoothnessProfile profile = resolve_profile(c);
  family_member(c, profile);
  std::vector<FaceDofCount> faces;
  for (int d = 0; d < profile.ambient_dim(); ++d) faces.push_back(count_face_dofs(profile, d));
  const CountTable table = table_from_constructive(profile, faces, count_interior_dofs(profile));
  const bool complete = table.grand_total == poly_dim(profile.ambient_dim(), profile.degree());
  return {render(table, c.format), complete ? kExitPass : kExitFailure};
}

Outcome run_partition(const RunConfig& c) {
  const CountTable table = table_from_partition(partition(resolve_profile(c)));
  return {render(table, c.format), kExitPass};
}

Outcome run_verify(const RunConfig& c) {
  const SmoothnessProfile profile = resolve_profile(c);
  const CountComparison cmp = verify_counts(c.dim, family_member(c, profile));
  std::ostringstream out;
  if (c.format == Format::json) {
    nlohmann::json doc;
    doc["dimension"] = std::to_string(c.dim);
    doc["degree"] = std::to_string(profile.degree());
    doc["pass"] = cmp.pass();
    doc["checks"] = nlohmann::json::array();
    for (const auto& check : cmp.checks) {
      doc["checks"].push_back({{"label", check.label},
                               {"expected", check.expected.get_str()},
                               {"actual", check.actual.get_str()},
                               {"ok", check.ok()}});
    }
    doc["mismatches"] = cmp.mismatches;
    doc["grand_total"] = cmp.partition.grand_total.get_str();
    out << doc.dump(2) << '\n';
  } else if (c.format == Format::csv) {
    out << "label,expected,actual,ok\n";
    for (const auto& check : cmp.checks) {
      out << '"' << check.label << "\"," << check.expected << ',' << check.actual << ','
          << (check.ok() ? 1 : 0) << '\n';
    }
  } else {
    for (const auto& check : cmp.checks) {
      out << (check.ok() ? "ok       " : "MISMATCH ") << check.label << ": expected "
          << check.expected << ", got " << check.actual << '\n';
    }
    for (const auto& m : cmp.mismatches) out << "mismatch: " << m << '\n';
    out << cmp.checks.size() << " checks, " << cmp.mismatches.size() << " mismatches\n";
    out << "total " << cmp.partition.grand_total << '\n';
    out << (cmp.pass() ? "PASS" : "FAIL") << '\n';
  }
  return {out.str(), cmp.pass() ? kExitPass : kExitFailure};
}

Outcome run_unisolvence(const RunConfig& c) {
  const SmoothnessProfile profile = resolve_profile(c);
  const UnisolvenceResult r = verify_unisolvence(c.dim, family_member(c, profile), size_cap());
  std::ostringstream out;
  if (c.format == Format::json) {
    out << nlohmann::json{{"dimension", std::to_string(c.dim)},
                          {"degree", std::to_string(profile.degree())},
                          {"poly_dim", std::to_string(r.dimension)},
                          {"rank", std::to_string(r.rank)},
                          {"pass", r.pass}}
               .dump(2)
        << '\n';
  } else if (c.format == Format::csv) {
    out << "dimension,degree,poly_dim,rank,pass\n"
        << c.dim << ',' << profile.degree() << ',' << r.dimension << ',' << r.rank << ','
        << (r.pass ? 1 : 0) << '\n';
  } else {
    out << "rank " << r.rank << " of " << r.dimension << '\n' << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  return {out.str(), r.pass ? kExitPass : kExitFailure};
}

Outcome run_continuity(const RunConfig& c) {
  const SmoothnessProfile profile = resolve_profile(c);
  if (c.samples < 1) throw InvalidArgument("--samples must be positive");
  const ContinuityReport r =
      verify_continuity(c.dim, family_member(c, profile), c.seed, c.samples);
  const bool pass = r.max_jump == 0;
  std::ostringstream out;
  if (c.format == Format::json) {
    out << nlohmann::json{{"dimension", std::to_string(c.dim)},
                          {"degree", std::to_string(profile.degree())},
                          {"seed", std::to_string(c.seed)},
                          {"samples", std::to_string(c.samples)},
                          {"global_dofs", std::to_string(r.global_dofs)},
                          {"shared_functionals", std::to_string(r.shared_functionals)},
                          {"evaluations", std::to_string(r.evaluations)},
                          {"max_jump", r.max_jump.get_str()},
                          {"pass", pass}}
               .dump(2)
        << '\n';
  } else if (c.format == Format::csv) {
    out << "dimension,degree,seed,samples,global_dofs,shared_functionals,evaluations,max_jump\n"
        << c.dim << ',' << profile.degree() << ',' << c.seed << ',' << c.samples << ','
        << r.global_dofs << ',' << r.shared_functionals << ',' << r.evaluations << ','
        << r.max_jump << '\n';
  } else {
    out << r.global_dofs << " global DOFs, " << r.shared_functionals << " shared\n"
        << r.evaluations << " derivative comparisons\n"
        << "max jump = " << r.max_jump << '\n'
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return {out.str(), pass ? kExitPass : kExitFailure};
}

Outcome run_export(const RunConfig& c) {
  if (c.dim > 3) throw Unsupported("export lists functionals for dimensions 1..3 only");
  const ElementSpec element = build_element(resolve_profile(c), size_cap());
  switch (c.format) {
    case Format::json: return {functionals_to_json(element), kExitPass};
    case Format::csv: return {functionals_to_csv(element), kExitPass};
    case Format::text: break;
  }
  return {functionals_to_text(element), kExitPass};
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, Outcome (*)(const RunConfig&)> commands{
      {"count", run_count},           {"partition", run_partition},
      {"verify", run_verify},         {"unisolvence", run_unisolvence},
      {"continuity", run_continuity}, {"export", run_export}};
  const auto it = commands.find(config.command);
  if (it == commands.end()) {
    err << "unknown command '" << config.command << "'\n";
    return kExitUsage;
  }
  Outcome outcome;
  try {
    outcome = it->second(config);
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {  // InvalidArgument, InvalidConfiguration
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Unsupported& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file || !(file << outcome.report)) {
      err << "error: cannot write " << *config.output << '\n';
      return kExitUsage;
    }
  } else {
    out << outcome.report;
  }
  return outcome.code;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smooth simplex finite element DOF counts and checks", "ssfem"};
  app.require_subcommand(1, 1);

  RunConfig config;
  std::vector<int> profile;
  int degree = 0;
  std::string format = "text";
  std::string output;
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  const std::vector<std::pair<std::string, std::string>> commands{
      {"count", "Closed-form DOF counts per face dimension"},
      {"partition", "DOF counts from the distance partition of all Bernstein indices"},
      {"verify", "Compare partition, closed-form and published counts"},
      {"unisolvence", "Exact rank of the element's Vandermonde matrix"},
      {"continuity", "Derivative jumps across the shared facet of two elements"},
      {"export", "List the nodal functionals (dimensions 1..3)"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--dim,-n", config.dim, "Space dimension")->check(CLI::Range(1, 10));
    sub->add_option("--smoothness,-m", config.smoothness, "Smoothness m of the element family")
        ->check(CLI::PositiveNumber);
    sub->add_option("--degree,-k", degree, "Polynomial degree override")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--profile", profile, "Orders r_0 ... r_{n-1} (comma separated)")
        ->delimiter(',');
    sub->add_option("--seed", config.seed, "Seed for random DOF values and points");
    sub->add_option("--samples", config.samples, "Points per shared face")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output,-o", output, "Write the report to this file");
    sub->callback([&config, name = name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--degree")) config.degree = degree;
  if (sub->count("--profile")) config.profile = profile;
  if (sub->count("--output")) config.output = output;
  config.format = formats.at(format);
  if (!sub->count("--format") && config.command == "export") config.format = Format::json;
  return run(config, out, err);
}

}  // namespace ssfem::cli
