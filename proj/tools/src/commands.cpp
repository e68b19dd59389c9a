#include "jacobi_cli/commands.hpp"

#include <chrono>
#include <sstream>

#include "jacobi/errors.hpp"
#include "jacobi/experiments.hpp"
#include "jacobi_cli/documents.hpp"

namespace jacobi::cli {
namespace {

std::uint64_t seed_of(const json& input, const Options& opts) {
  if (opts.seed) return *opts.seed;
  return input.value("seed", std::uint64_t{1});
}

MechanismKind parse_mechanism(const std::string& s) {
  for (MechanismKind k : {MechanismKind::Cut, MechanismKind::ConstantBranch, MechanismKind::Palindrome,
                          MechanismKind::ScalarBlock}) {
    if (s == mechanism_name(k)) return k;
  }
  throw ValidationError("unknown mechanism '" + s + "'");
}

template <typename T>
T field(const json& input, const char* key, T fallback) {
  if (!input.contains(key)) return fallback;
  try {
    return input[key].get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("campaign field \"") + key + "\" has the wrong type");
  }
}

CampaignReport run_campaign_document(const json& input, const Options& opts) {
  if (!input.is_object()) throw ValidationError("campaign document must be a JSON object");
  const std::string op = field<std::string>(input, "operation", "campaign");
  const std::uint64_t seed = seed_of(input, opts);
  const auto n = field<std::size_t>(input, "n", 4);
  const auto samples = field<std::size_t>(input, "samples", 100);
  const int range = field<int>(input, "range", 9);
  if (range < 1) throw ValidationError("campaign range must be positive");
  if (op == "campaign") {
    Campaign c{field<std::string>(input, "name", ""), n, parse_sampler(field<std::string>(input, "sampler", "generic")),
               range, samples, seed};
    if (c.n < 1) throw ValidationError("campaign n must be positive");
    return run_campaign(c);
  }
  if (op == "generic") return run_generic(n, samples, range, seed);
  if (op == "degree8") {
    return run_degree8_scan(samples, range, seed, parse_sampler(field<std::string>(input, "sampler", "generic")));
  }
  if (op == "d2-grid") return run_d2_grid();
  if (op == "coprime") return run_coprime_sweep(field<std::size_t>(input, "n_max", 8), samples, seed, range);
  if (op == "codim") {
    return run_codim_probe(n, parse_mechanism(field<std::string>(input, "mechanism", "Palindrome")), samples, seed,
                           range);
  }
  if (op == "d3") return run_d3_classification(samples, range, seed);
  throw ValidationError("unknown campaign operation '" + op + "'");
}

}  // namespace

CommandResult run_command(const std::string& command, const json& input, std::string_view input_text,
                          const Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult out;
  json result;
  if (command == "charpoly") {
    const JacobiPencil p = pencil_from_json(input, input_text);
    const BiPoly curve = opts.form == Form::T ? continuant(p) : spectral_curve(p);
    result = {{"curve", to_json(curve)}, {"text", curve.str()}};
  } else if (command == "detect") {
    result = to_json(apply_all(pencil_from_json(input, input_text)));
  } else if (command == "decide") {
    const JacobiPencil p = pencil_from_json(input, input_text);
    try {
      result = to_json(decide(p));
    } catch (const UnsupportedError& e) {
      result = {{"status", "UNSUPPORTED"}, {"note", e.what()}, {"mechanisms", to_json(apply_all(p))}};
      out.exit_code = kExitUnsupported;
    }
  } else if (command == "monodromy") {
    result = to_json(monodromy_group(pencil_from_json(input, input_text)));
  } else if (command == "campaign") {
    const CampaignReport rep = run_campaign_document(input, opts);
    result = to_json(rep);
    out.csv = rep.to_csv();
  } else {
    throw ValidationError("unknown command '" + command + "'");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.document = {{"tool", kToolName},
                  {"version", kToolVersion},
                  {"command", command},
                  {"input", input},
                  {"result", result},
                  {"timing", {{"seconds", seconds}}}};
  return out;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e)) return kExitValidation;
  if (dynamic_cast<const UnsupportedError*>(&e)) return kExitUnsupported;
  if (dynamic_cast<const TrackingError*>(&e)) return kExitTracking;
  return kExitFailure;
}

std::string render_text(const json& doc) {
  std::ostringstream out;
  const std::string cmd = doc.value("command", "");
  const json& r = doc["result"];
  out << cmd << '\n';
  if (cmd == "charpoly") {
    out << "  " << r["text"].get<std::string>() << '\n';
  } else if (cmd == "detect") {
    out << "  reducible: " << r["reducible"] << '\n';
    for (const auto& c : r["certificates"]) {
      out << "  " << c["kind"].get<std::string>() << " on sites " << c["block"][0] << ".." << c["block"][1] << ", "
          << c["factors"].size() << " factors\n";
    }
  } else if (cmd == "decide") {
    out << "  " << r["status"].get<std::string>() << '\n';
    if (r.contains("factors")) {
      for (const auto& f : r["factors"]) out << "  factor on sites " << f["sites"].dump() << '\n';
    }
    if (r.contains("note")) out << "  " << r["note"].get<std::string>() << '\n';
  } else if (cmd == "monodromy") {
    out << "  branch points: " << r["branch_points"].size() << '\n';
    out << "  group order: " << r["group_order"].dump() << '\n';
    out << "  orbits: " << r["orbits"].dump() << '\n';
  } else if (cmd == "campaign") {
    out << "  " << r["name"].get<std::string>() << ": " << r["samples"] << " samples\n";
    for (const auto& [k, v] : r["counts"].items()) out << "  " << k << ": " << v << '\n';
    out << "  mismatches: " << r["mismatches"].size() << '\n';
  }
  out << "  time: " << doc["timing"]["seconds"].get<double>() << " s\n";
  return out.str();
}

}  // namespace jacobi::cli
