#include "cli.hpp"

#include <CLI11.hpp>

#include <string>
#include <vector>

#include "permorb/error.hpp"
#include "permorb/fusion_table.hpp"
#include "permorb/io.hpp"
#include "permorb/orbifold.hpp"
#include "permorb/verify.hpp"
#include "permorb/version.hpp"

namespace permorb::cli {

namespace {

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string input;
  bool json = false;
  bool csv = false;
  std::size_t max_l = 64;
  unsigned threads = 0;
  std::string label_a;
  std::string label_b;

  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

Orbifold load(const RunConfig& cfg) { return Orbifold(GramLattice::validate(read_gram_file(cfg.input))); }

std::string multiset_line(const Orbifold& orb, const FusionMultiset& m, const char* sep) {
  std::string out;
  for (const auto& [label, n] : m) {
    if (!out.empty()) out += sep;
    if (n != 1) out += std::to_string(n) + "*";
    out += orb.to_string(label);
  }
  return out;
}

std::string csv_field(const std::string& s) { return "\"" + s + "\""; }

int cmd_modules(const RunConfig& cfg, std::ostream& out) {
  const Orbifold orb = load(cfg);
  const auto mods = orb.modules();
  if (cfg.json) {
    Json doc;
    doc["count"] = mods.size();
    doc["modules"] = Json::array();
    for (const auto& m : mods) doc["modules"].push_back(to_json(orb, m));
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& m : mods) out << orb.to_string(m) << "\n";
  }
  return 0;
}

int cmd_qdims(const RunConfig& cfg, std::ostream& out) {
  const Orbifold orb = load(cfg);
  const auto mods = orb.modules();
  if (cfg.json) {
    Json doc;
    doc["qdims"] = Json::array();
    for (const auto& m : mods) doc["qdims"].push_back(Json{{"label", to_json(orb, m)}, {"qdim", to_json(orb.qdim(m))}});
    doc["glob"] = to_json(orb.glob());
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& m : mods) out << orb.to_string(m) << " " << to_string(orb.qdim(m)) << "\n";
    out << "glob " << to_string(orb.glob()) << "\n";
  }
  return 0;
}

int cmd_fuse(const RunConfig& cfg, std::ostream& out) {
  const Orbifold orb = load(cfg);
  const auto a = parse_label(orb, cfg.label_a);
  const auto b = parse_label(orb, cfg.label_b);
  const auto product = orb.fuse(a, b);
  if (cfg.json) {
    Json doc;
    doc["a"] = to_json(orb, a);
    doc["b"] = to_json(orb, b);
    doc["product"] = to_json(orb, product);
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [label, n] : product) out << (n != 1 ? std::to_string(n) + "*" : "") << orb.to_string(label) << "\n";
  }
  return 0;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const Orbifold orb = load(cfg);
  const auto m = parse_label(orb, cfg.label_a);
  const auto parts = orb.decompose(m);
  const BaseFusion& base = orb.base();
  if (cfg.json) {
    Json doc;
    doc["label"] = to_json(orb, m);
    doc["constituents"] = Json::array();
    for (const auto& [v, w] : parts) doc["constituents"].push_back(Json{{"vl", to_json(base, v)}, {"vlplus", to_json(base, w)}});
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [v, w] : parts) out << base.to_string(v) << " x " << base.to_string(w) << "\n";
  }
  return 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const Orbifold orb = load(cfg);
  const FusionTable table(orb, TableOptions{cfg.max_l, cfg.threads});
  const auto& labels = table.labels();
  const std::size_t n = table.size();
  switch (cfg.format()) {
    case Format::Json: {
      Json doc;
      doc["labels"] = Json::array();
      for (const auto& m : labels) doc["labels"].push_back(to_json(orb, m));
      doc["entries"] = Json::array();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (const auto& [c, mult] : table.product(a, b)) doc["entries"].push_back(Json::array({a, b, c, mult}));
      out << doc.dump() << "\n";
      break;
    }
    case Format::Csv:
      out << "a,b,c,multiplicity\n";
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (const auto& [c, mult] : table.product(a, b))
            out << csv_field(orb.to_string(labels[a])) << "," << csv_field(orb.to_string(labels[b])) << ","
                << csv_field(orb.to_string(labels[c])) << "," << mult << "\n";
      break;
    case Format::Text:
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
          FusionMultiset m;
          for (const auto& [c, mult] : table.product(a, b)) m[labels[c]] = mult;
          out << orb.to_string(labels[a]) << " x " << orb.to_string(labels[b]) << " = " << multiset_line(orb, m, " + ")
              << "\n";
        }
      break;
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Orbifold orb = load(cfg);
  VerifyOptions options;
  options.max_l = cfg.max_l;
  options.threads = cfg.threads;
  const Report report = verify_orbifold(orb, options);
  if (cfg.json) {
    Json doc;
    doc["passed"] = report.passed();
    doc["checks"] = Json::array();
    for (const auto& c : report.checks) {
      const char* status = c.status == CheckStatus::Pass ? "pass" : c.status == CheckStatus::Fail ? "fail" : "skipped";
      doc["checks"].push_back(Json{{"name", c.name}, {"status", status}, {"detail", c.detail}});
    }
    out << doc.dump(2) << "\n";
  } else {
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
      if (c.status == CheckStatus::Fail) ++failed;
      out << to_string(c.status) << " " << c.name << ": " << c.detail << "\n";
    }
    if (failed == 0) {
      out << "all checks passed\n";
    } else {
      out << failed << " check(s) failed\n";
    }
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fusion rules of the 2-permutation orbifold (V_L x V_L)^Z2 of a lattice VOA", "permorb"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  auto input = [&](CLI::App* sub) {
    sub->add_option("gram", cfg.input, "JSON file of the form {\"gram\": [[...]]}")->required();
    sub->add_flag("--json", cfg.json, "machine-readable JSON output");
  };

  auto* modules = app.add_subcommand("modules", "list the irreducible modules");
  input(modules);
  auto* qdims = app.add_subcommand("qdims", "quantum dimensions and the global dimension");
  input(qdims);
  auto* fuse = app.add_subcommand("fuse", "fusion product of two modules");
  input(fuse);
  fuse->add_option("a", cfg.label_a, "first label, e.g. D(1/2;0)")->required();
  fuse->add_option("b", cfg.label_b, "second label, e.g. N(1/2,0)")->required();
  auto* decompose = app.add_subcommand("decompose", "constituents over V_{sqrt2 L} x V_{sqrt2 L}^+");
  input(decompose);
  decompose->add_option("label", cfg.label_a, "label, e.g. T(0;1)")->required();
  auto* table = app.add_subcommand("table", "full fusion table");
  table->add_option("gram", cfg.input, "JSON file of the form {\"gram\": [[...]]}")->required();
  auto* json_flag = table->add_flag("--json", cfg.json, "JSON output");
  table->add_flag("--csv", cfg.csv, "CSV output")->excludes(json_flag);
  auto* verify = app.add_subcommand("verify", "check the fusion ring axioms");
  input(verify);
  for (auto* sub : {table, verify}) {
    sub->add_option("--max-l", cfg.max_l, "refuse lattices with det(G) above this bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads, 0 for all cores")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (modules->parsed()) return cmd_modules(cfg, out);
    if (qdims->parsed()) return cmd_qdims(cfg, out);
    if (fuse->parsed()) return cmd_fuse(cfg, out);
    if (decompose->parsed()) return cmd_decompose(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace permorb::cli
