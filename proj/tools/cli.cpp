#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bcc/center.hpp"
#include "bcc/families.hpp"

namespace bcc::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MathFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

BrauerConfig load_config(const std::string& path) {
  try {
    return parse_config(read_file(path));
  } catch (const ParseError& e) {
    throw UsageFailure("parse error in '" + path + "': " + e.what());
  }
}

BrauerConfig load_valid_config(const std::string& path, std::ostream& err) {
  BrauerConfig cfg = load_config(path);
  ValidationReport report = validate(cfg);
  if (!report.valid()) {
    for (const Violation& v : report.violations) {
      err << v.code << ": " << v.message << '\n';
    }
    throw MathFailure("configuration is not valid");
  }
  return cfg;
}

linalg::FieldSpec resolve_field(const std::string& flag_value) {
  if (!flag_value.empty()) {
    try {
      return linalg::parse_field_spec(flag_value);
    } catch (const std::invalid_argument& e) {
      throw UsageFailure(e.what());
    }
  }
  if (const char* env = std::getenv("BCC_FIELD")) {
    try {
      return linalg::parse_field_spec(env);
    } catch (const std::invalid_argument& e) {
      throw UsageFailure(std::string("BCC_FIELD: ") + e.what());
    }
  }
  return linalg::FieldSpec::rationals();
}

BrauerConfig example_config(const std::string& spec) {
  if (spec == "square") return families::square();
  if (spec == "two5") return families::two_five();
  if (spec == "2gon") return families::two_gon();
  if (spec.starts_with("self:")) {
    int n = 0;
    try {
      n = std::stoi(spec.substr(5));
    } catch (const std::exception&) {
      throw UsageFailure("bad example spec '" + spec + "'");
    }
    if (n < 1) throw UsageFailure("bad example spec '" + spec + "'");
    return families::self_loop(n);
  }
  if (spec.starts_with("cycle:")) {
    int m = 0;
    int n = 0;
    if (std::sscanf(spec.c_str() + 6, "%d,%d", &m, &n) != 2 || m < 1 || n < 1) {
      throw UsageFailure("bad example spec '" + spec + "'");
    }
    return families::cycle(m, n);
  }
  throw UsageFailure("unknown example '" + spec +
                     "' (square | cycle:m,N | self:N | two5 | 2gon)");
}

int cmd_validate(const std::string& path, std::ostream& out) {
  BrauerConfig cfg = load_config(path);
  ValidationReport report = validate(cfg);
  out << "valid: " << (report.valid() ? "yes" : "no") << '\n';
  for (const Violation& v : report.violations) {
    out << v.code << ": " << v.message << '\n';
  }
  out << "reduced: " << (is_reduced(cfg) ? "yes" : "no") << '\n';
  out << "connected: " << (is_connected(cfg) ? "yes" : "no") << '\n';
  return report.valid() ? kExitOk : kExitMath;
}

int cmd_quiver(const std::string& path, bool dot, std::ostream& out, std::ostream& err) {
  Quiver q(load_valid_config(path, err));
  if (dot) {
    out << to_dot(q);
    return kExitOk;
  }
  out << "vertices: " << q.vertex_count() << '\n';
  out << "arrows: " << q.arrows().size() << '\n';
  out << "loops: " << q.count_loops() << '\n';
  for (const Arrow& a : q.arrows()) {
    out << q.arrow_label(a.id) << ": " << q.config().polygon_name(a.source) << " -> "
        << q.config().polygon_name(a.target) << '\n';
  }
  return kExitOk;
}

int cmd_dims(const std::string& path, std::ostream& out, std::ostream& err) {
  BrauerConfig cfg = load_valid_config(path, err);
  AlgebraTable table{Quiver(cfg)};
  bool agree = true;
  for (int p = 0; p < cfg.polygon_count(); ++p) {
    const long long formula = dim_vv_formula(cfg, p);
    const int enumerated = dim_vv_enumerated(table, p);
    if (formula != enumerated) agree = false;
    out << "polygon " << cfg.polygon_name(p) << ": formula " << formula << ", enumerated "
        << enumerated << '\n';
  }
  out << "total dim: " << table.dim() << '\n';
  out << "agreement: " << (agree ? "yes" : "no") << '\n';
  return agree ? kExitOk : kExitMath;
}

int cmd_center(const std::string& path, const std::string& field_flag, bool basis,
               bool no_oracle, std::ostream& out, std::ostream& err) {
  BrauerConfig cfg = load_valid_config(path, err);
  linalg::FieldSpec field = resolve_field(field_flag);
  AlgebraTable table{Quiver(cfg)};
  CenterReport report = verify_theorem(table, field, !no_oracle);
  out << to_text(report, table);
  if (basis) {
    out << "basis:\n";
    for (const CenterBasisCandidate& cand : report.candidates) {
      out << "  " << cand.kind_name() << ' ' << cand.describe(table) << " = "
          << element_to_string(table, cand.value) << '\n';
    }
  }
  return report.success() ? kExitOk : kExitMath;
}

int cmd_report(const std::string& path, const std::string& field_flag, std::ostream& out,
               std::ostream& err) {
  BrauerConfig cfg = load_valid_config(path, err);
  linalg::FieldSpec field = resolve_field(field_flag);
  AlgebraTable table{Quiver(cfg)};
  const Quiver& q = table.quiver();

  nlohmann::ordered_json doc;
  doc["vertices"] = cfg.vertex_count();
  doc["polygons"] = cfg.polygon_count();

  VertexClassification cls = classify_vertices(cfg);
  auto names = [&cfg](const std::vector<int>& vs) {
    std::vector<std::string> out;
    for (int v : vs) out.push_back(cfg.vertex_name(v));
    return out;
  };
  doc["classification"] = {{"truncated", names(cls.truncated)},
                           {"loop_only", names(cls.loop_only)},
                           {"multi_cycle", names(cls.multi_cycle)},
                           {"simple_cycle", names(cls.simple_cycle)}};

  doc["q1_count"] = q.arrows().size();
  doc["loops"] = q.count_loops();

  nlohmann::ordered_json dims = nlohmann::ordered_json::array();
  for (int p = 0; p < cfg.polygon_count(); ++p) {
    dims.push_back({{"polygon", cfg.polygon_name(p)},
                    {"dim_formula", dim_vv_formula(cfg, p)},
                    {"dim_enumerated", dim_vv_enumerated(table, p)}});
  }
  doc["polygon_dims"] = std::move(dims);
  doc["dim_total"] = table.dim();

  bool ok = true;
  try {
    CenterReport report = verify_theorem(table, field, true);
    doc["center_dim"] = report.dim_formula;
    doc["center"] = nlohmann::ordered_json::parse(to_json(report, table));
    ok = report.success();
  } catch (const HypothesisError& e) {
    doc["center_dim"] = nullptr;
    doc["center"] = nullptr;
    doc["center_error"] = e.what();
    ok = false;
  }
  out << doc.dump(2) << '\n';
  return ok ? kExitOk : kExitMath;
}

int cmd_verify(std::uint64_t seed, int count, int max_polygons, int max_mult,
               const std::string& field_flag, std::ostream& out) {
  linalg::FieldSpec field = resolve_field(field_flag);
  std::vector<std::pair<std::uint64_t, std::string>> failures;

  for (int i = 0; i < count; ++i) {
    const std::uint64_t config_seed = seed + static_cast<std::uint64_t>(i);
    RandomConfigParams params;
    params.seed = config_seed;
    params.polygon_count = 1 + static_cast<int>(config_seed % max_polygons);
    params.max_polygon_size = 2 + static_cast<int>((config_seed / 7) % 3);
    params.max_multiplicity = 1 + static_cast<int>((config_seed / 3) % max_mult);

    std::string failure;
    try {
      BrauerConfig cfg = generate_random(params);
      AlgebraTable table{Quiver(cfg)};
      const Quiver& q = table.quiver();

      long long val_sum = 0;
      for (int v = 0; v < cfg.vertex_count(); ++v) {
        if (!cfg.is_truncated(v)) val_sum += cfg.val(v);
      }
      if (val_sum != static_cast<long long>(q.arrows().size())) {
        failure = "arrow count != valency sum";
      }
      for (int p = 0; failure.empty() && p < cfg.polygon_count(); ++p) {
        if (dim_vv_formula(cfg, p) != dim_vv_enumerated(table, p)) {
          failure = "dim mismatch at polygon " + cfg.polygon_name(p);
        }
      }
      if (failure.empty()) {
        IdentityReport identities = verify_identities(table);
        if (!identities.all_pass()) failure = identities.summary();
      }
      if (failure.empty()) {
        CenterReport report = verify_theorem(table, field, true);
        if (!report.success()) {
          failure = "center verification failed (formula " +
                    std::to_string(report.dim_formula) + ", oracle " +
                    (report.dim_oracle ? std::to_string(*report.dim_oracle) : "-") + ")";
        }
      }
    } catch (const std::exception& e) {
      failure = e.what();
    }
    if (!failure.empty()) failures.emplace_back(config_seed, failure);
  }

  out << "configs: " << count << '\n';
  out << "failures: " << failures.size() << '\n';
  for (const auto& [bad_seed, what] : failures) {
    out << "seed " << bad_seed << ": " << what << '\n';
  }
  out << (failures.empty() ? "all checks passed" : "FAILED") << '\n';
  return failures.empty() ? kExitOk : kExitMath;
}

int cmd_gen(const std::string& example, std::uint64_t seed, int polygons, int max_size,
            int max_mult, const std::string& output, std::ostream& out) {
  BrauerConfig cfg;
  if (!example.empty()) {
    cfg = example_config(example);
  } else {
    RandomConfigParams params;
    params.seed = seed;
    params.polygon_count = polygons;
    params.max_polygon_size = max_size;
    params.max_multiplicity = max_mult;
    try {
      cfg = generate_random(params);
    } catch (const std::invalid_argument& e) {
      throw UsageFailure(e.what());
    }
  }
  std::string text = serialize(cfg);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw UsageFailure("cannot write '" + output + "'");
    file << text;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brauer configuration algebras: quivers, dimensions, and the center"};
  app.name("bcc");
  app.require_subcommand(1);

  std::string file;
  std::string field_flag;
  std::string example;
  std::string output;
  bool dot = false;
  bool basis = false;
  bool no_oracle = false;
  std::uint64_t seed = 0;
  int count = 20;
  int max_polygons = 6;
  int max_mult = 3;
  int polygons = 4;
  int max_size = 4;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a configuration file");
  validate_cmd->add_option("file", file)->required();

  CLI::App* quiver_cmd = app.add_subcommand("quiver", "print the induced quiver");
  quiver_cmd->add_option("file", file)->required();
  quiver_cmd->add_flag("--dot", dot, "emit DOT");

  CLI::App* dims_cmd = app.add_subcommand("dims", "per-polygon dimensions, two ways");
  dims_cmd->add_option("file", file)->required();

  CLI::App* center_cmd = app.add_subcommand("center", "center dimension and basis");
  center_cmd->add_option("file", file)->required();
  center_cmd->add_option("--field", field_flag, "q or p=<prime>");
  center_cmd->add_flag("--basis", basis, "print the center basis");
  center_cmd->add_flag("--no-oracle", no_oracle, "skip the kernel oracle");

  CLI::App* verify_cmd = app.add_subcommand("verify", "random verification battery");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--count", count);
  verify_cmd->add_option("--max-polygons", max_polygons);
  verify_cmd->add_option("--max-mult", max_mult);
  verify_cmd->add_option("--field", field_flag, "q or p=<prime>");

  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a configuration file");
  gen_cmd->add_option("--example", example, "square | cycle:m,N | self:N | two5 | 2gon");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--polygons", polygons);
  gen_cmd->add_option("--max-size", max_size);
  gen_cmd->add_option("--max-mult", max_mult);
  gen_cmd->add_option("-o,--output", output);

  CLI::App* report_cmd = app.add_subcommand("report", "machine-readable aggregate report");
  report_cmd->add_option("file", file)->required();
  report_cmd->add_option("--field", field_flag, "q or p=<prime>");

  std::vector<const char*> argv;
  argv.push_back("bcc");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink;
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, out);
    if (quiver_cmd->parsed()) return cmd_quiver(file, dot, out, err);
    if (dims_cmd->parsed()) return cmd_dims(file, out, err);
    if (center_cmd->parsed()) return cmd_center(file, field_flag, basis, no_oracle, out, err);
    if (verify_cmd->parsed()) {
      if (count < 0 || max_polygons < 1 || max_mult < 1) {
        throw UsageFailure("verify: counts must be positive");
      }
      return cmd_verify(seed, count, max_polygons, max_mult, field_flag, out);
    }
    if (gen_cmd->parsed()) return cmd_gen(example, seed, polygons, max_size, max_mult, output, out);
    if (report_cmd->parsed()) return cmd_report(file, field_flag, out, err);
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MathFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bcc::cli
