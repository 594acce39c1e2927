#include "fcsph/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "fcsph/errors.hpp"
#include "fcsph/verify.hpp"

namespace fcsph {

namespace {

struct RunConfig {
  std::string type;
  std::string target;
  std::string format = "json";
  std::string output;
  std::string cache;
  std::string word;
  std::string ideal_gen;
  bool has_word = false;
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  int workers = 0;
  std::uint64_t budget = kDefaultWeylBudget;
  double cap_words = static_cast<double>(kDefaultWordCap);
};

Json coords_json(const RootSystem& rs, int r) {
  Json a = Json::array();
  for (int c : rs.coords(r)) a.push_back(c);
  return a;
}

Json roots_json(const RootSystem& rs, const std::vector<int>& roots) {
  Json a = Json::array();
  for (int r : roots) a.push_back(coords_json(rs, r));
  return a;
}

Json affine_json(const RootSystem& rs, const AffineRootSet& s) {
  Json a = Json::array();
  for (const auto& r : s.members()) a.push_back({{"level", r.level}, {"coords", coords_json(rs, r.root)}});
  return a;
}

Json word_json(const Word& w) { return Json(w); }

std::string roots_text(const RootSystem& rs, const std::vector<int>& roots) {
  std::string s;
  for (std::size_t k = 0; k < roots.size(); ++k) s += (k ? " " : "") + rs.format(roots[k]);
  return s;
}

Json fingerprint_json(const OrbitFingerprint& fp) {
  return {{"orbit_dim", fp.orbit_dim}, {"height", fp.height}, {"ranks", fp.ranks}};
}

VerifyOptions options_of(const RunConfig& cfg) {
  VerifyOptions o;
  o.trials = cfg.trials;
  o.seed = cfg.seed;
  o.workers = cfg.workers > 0 ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
  o.budget = cfg.budget;
  o.word_cap = static_cast<std::size_t>(cfg.cap_words);
  return o;
}

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << "\n"; }

// Writes to --output when given, else to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + cfg.output);
  f << text;
  if (!f) throw InvalidArgument("cannot write " + cfg.output);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const CartanType type = CartanType::parse(cfg.type);
  const VerifyOptions opts = options_of(cfg);
  std::filesystem::path cache_file;
  if (!cfg.cache.empty()) {
    cache_file = std::filesystem::path(cfg.cache) /
                 (type.name() + "-" + cfg.target + "-" + std::string(kCodeVersion) + ".json");
    std::ifstream in(cache_file);
    if (in) {
      const Json cached = Json::parse(in);
      emit(cfg, out, cached.dump(2) + "\n");
      return cached.at("mismatches").empty() ? kExitOk : kExitMismatch;
    }
  }
  if (cfg.target == "g2" && !type.is_g2()) throw InvalidArgument("verify g2 needs --type G2");

  const VerifyContext ctx = make_context(type, opts);
  Report report;
  if (cfg.target == "theorem1") report = verify_theorem1(ctx, opts);
  else if (cfg.target == "theorem2") report = verify_theorem2(ctx, opts);
  else if (cfg.target == "subspaces") report = verify_subspace_theorem(ctx, opts);
  else if (cfg.target == "lemmas") report = verify_lemmas(ctx, opts);
  else report = verify_g2(ctx, opts);

  Json j = to_json(report);
  j["code_version"] = kCodeVersion;
  j["trials"] = opts.trials;
  j["seed"] = opts.seed;
  if (!cache_file.empty()) {
    std::filesystem::create_directories(cache_file.parent_path());
    std::ofstream f(cache_file, std::ios::binary);
    write_json(f, j);
  }
  std::ostringstream os;
  write_json(os, j);
  emit(cfg, out, os.str());
  return report.ok() ? kExitOk : kExitMismatch;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render(const Table& t, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    for (std::size_t k = 0; k < t.header.size(); ++k) os << (k ? "," : "") << csv_field(t.header[k]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_field(row[k]);
      os << "\n";
    }
    return os.str();
  }
  os << "|";
  for (const auto& h : t.header) os << " " << h << " |";
  os << "\n|";
  for (std::size_t k = 0; k < t.header.size(); ++k) os << " --- |";
  os << "\n";
  for (const auto& row : t.rows) {
    os << "|";
    for (const auto& c : row) os << " " << (c.empty() ? "-" : c) << " |";
    os << "\n";
  }
  return os.str();
}

int cmd_atlas(const RunConfig& cfg, std::ostream& out) {
  const CartanType type = CartanType::parse(cfg.type);
  const VerifyOptions opts = options_of(cfg);
  const bool ideals = cfg.target == "ideals";
  const VerifyContext ctx = make_context(type, opts, !ideals, ideals);
  const RootSystem& rs = *ctx.rs;

  Json records = Json::array();
  Table table;
  if (ideals) {
    table.header = {"index", "generators", "members", "layers", "w_word", "abelian", "spherical", "fc"};
    for (std::size_t k = 0; k < ctx.ideals.size(); ++k) {
      const CombinatorialIdeal& I = ctx.ideals[k];
      const AffineRootSet ph = psi_hat(rs, I);
      const AffineWeylWord w = element_from_biconvex_affine(ctx.rs, ph);
      const bool abelian = is_abelian(rs, I.members);
      const bool sph = ctx.index->is_spherical(I.members);
      const bool fc = is_fc_affine(rs, ph);
      Json layers = Json::array();
      for (const auto& layer : I.layers) layers.push_back(roots_json(rs, layer.members()));
      records.push_back({{"generators", roots_json(rs, I.generators(rs))},
                         {"members", roots_json(rs, I.members.members())},
                         {"layers", layers},
                         {"psi_hat", affine_json(rs, ph)},
                         {"w_word", word_json(w.word())},
                         {"abelian", abelian},
                         {"spherical", sph},
                         {"fc", fc}});
      table.rows.push_back({std::to_string(k), roots_text(rs, I.generators(rs)), roots_text(rs, I.members.members()),
                            std::to_string(I.layers.size()), format_word(w.word()), abelian ? "true" : "false",
                            sph ? "true" : "false", fc ? "true" : "false"});
    }
  } else {
    table.header = {"index", "word", "length", "inversions", "commutative", "spherical"};
    for (const auto& w : ctx.W) {
      if (!is_fc_inv(w)) continue;
      const bool comm = is_commutative_inv(w);
      const bool sph = ctx.index->is_spherical(w.inversions());
      records.push_back({{"word", word_json(w.word())},
                         {"length", w.length()},
                         {"inversions", roots_json(rs, w.inversions().members())},
                         {"commutative", comm},
                         {"spherical", sph}});
      table.rows.push_back({std::to_string(table.rows.size()), format_word(w.word()), std::to_string(w.length()),
                            roots_text(rs, w.inversions().members()), comm ? "true" : "false", sph ? "true" : "false"});
    }
  }

  if (cfg.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["code_version"] = kCodeVersion;
    j["type"] = type.name();
    j["atlas"] = cfg.target;
    j["count"] = records.size();
    j["records"] = records;
    std::ostringstream os;
    write_json(os, j);
    emit(cfg, out, os.str());
  } else {
    emit(cfg, out, render(table, cfg.format));
  }
  return kExitOk;
}

int cmd_inspect(const RunConfig& cfg, std::ostream& out) {
  const CartanType type = CartanType::parse(cfg.type);
  const RootSystemPtr rs = RootSystem::build(type);
  const ChevalleyPtr L = ChevalleyAlgebra::build(rs);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["code_version"] = kCodeVersion;
  j["type"] = type.name();

  RootSet psi = rs->empty_set();
  if (cfg.has_word) {
    const Word input = parse_word(cfg.word);
    for (int i : input)
      if (i < 1 || i > rs->rank()) throw InvalidArgument("simple index " + std::to_string(i) + " out of range");
    const WeylElement w = WeylElement::from_word(rs, input);
    psi = w.inversions();
    j["subject"] = "element";
    j["input_word"] = word_json(input);
    j["reduced"] = static_cast<int>(input.size()) == w.length();
    j["word"] = word_json(w.word());
    j["length"] = w.length();
    j["inversions"] = roots_json(*rs, psi.members());
    j["fc"] = is_fc_inv(w);
    j["commutative"] = is_commutative_inv(w);
  } else {
    std::vector<int> gens;
    std::string text = cfg.ideal_gen;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(';', pos);
      if (next == std::string::npos) next = text.size();
      gens.push_back(parse_root(*rs, text.substr(pos, next - pos)));
      pos = next + 1;
    }
    const CombinatorialIdeal I = ideal_generated_by(*rs, gens);
    psi = I.members;
    const AffineRootSet ph = psi_hat(*rs, I);
    const AffineWeylWord w = element_from_biconvex_affine(rs, ph);
    Json layers = Json::array();
    for (const auto& layer : I.layers) layers.push_back(roots_json(*rs, layer.members()));
    j["subject"] = "ideal";
    j["generators"] = roots_json(*rs, I.generators(*rs));
    j["members"] = roots_json(*rs, psi.members());
    j["layers"] = layers;
    j["psi_hat"] = affine_json(*rs, ph);
    j["w_word"] = word_json(w.word());
    j["abelian"] = is_abelian(*rs, psi);
    j["fc"] = is_fc_affine(*rs, ph);
    j["commutative"] = is_commutative_affine(*rs, ph);
  }
  j["pairing_nonneg"] = pairing_nonneg(*rs, psi);
  const auto witness = spherical_witness_direct(*L, psi);
  j["spherical"] = !witness.has_value();
  j["witness"] = witness ? roots_json(*rs, std::vector<int>(witness->begin(), witness->end())) : Json();
  const PatternMatch m = find_orthogonal_pattern(*rs, psi);
  j["orthogonal_pattern"] = {{"pattern", to_string(m.pattern)}, {"roots", roots_json(*rs, m.roots)}};
  j["fingerprint"] = fingerprint_json(orbit_fingerprint(*L, psi, cfg.trials, cfg.seed));
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  std::ostringstream os;
  write_json(os, j);
  emit(cfg, out, os.str());
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fully commutative elements and spherical nilpotent orbits", "fcsph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kCodeVersion));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type, e.g. B3")->required();
    sub->add_option("--trials", cfg.trials, "random samples per subject")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "sampler seed");
    sub->add_option("--workers", cfg.workers, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
    sub->add_option("--budget", cfg.budget, "largest Weyl group to enumerate");
    sub->add_option("--cap-words", cfg.cap_words, "reduced-word cap")->check(CLI::PositiveNumber);
    sub->add_option("--output,-o", cfg.output, "write to a file instead of stdout");
  };

  CLI::App* verify = app.add_subcommand("verify", "run an exhaustive verifier");
  verify->add_option("target", cfg.target, "theorem1 | theorem2 | subspaces | lemmas | g2")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "subspaces", "lemmas", "g2"}));
  verify->add_option("--cache", cfg.cache, "directory of cached reports");
  common(verify);

  CLI::App* atlas = app.add_subcommand("atlas", "tabulate ideals or fully commutative elements");
  atlas->add_option("target", cfg.target, "ideals | fc")->required()->check(CLI::IsMember({"ideals", "fc"}));
  atlas->add_option("--format", cfg.format, "json | csv | md")->check(CLI::IsMember({"json", "csv", "md"}));
  common(atlas);

  CLI::App* inspect = app.add_subcommand("inspect", "report on one element or ideal");
  auto* word_opt = inspect->add_option("--word", cfg.word, "reduced word, e.g. 1,2,1");
  auto* gen_opt = inspect->add_option("--ideal-gen", cfg.ideal_gen, "generators as coefficient lists, ';'-separated");
  word_opt->excludes(gen_opt);
  common(inspect);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (atlas->parsed()) return cmd_atlas(cfg, out);
    cfg.has_word = word_opt->count() > 0;
    if (!cfg.has_word && gen_opt->count() == 0) throw InvalidArgument("inspect needs --word or --ideal-gen");
    return cmd_inspect(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "fcsph: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "fcsph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "fcsph: unreadable cache: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace fcsph
