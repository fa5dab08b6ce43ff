#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "crg/errors.hpp"
#include "crg/frames/frame_calculus.hpp"
#include "crg/groups/group_template.hpp"
#include "crg/hypersurface/hypersurface.hpp"
#include "crg/report.hpp"
#include "crg/util/parallel.hpp"

namespace crg::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  bool strict_errata = false;

  std::string group;
  bool all = false;
  std::string check = "all";
  bool show_basis = false;

  std::string cls;
  bool diff_paper = false;
  std::string preset_file;

  std::string manifold;
  std::vector<std::string> points;
  std::size_t random_points = 0;

  std::string map_file;
  std::string source;
  std::string target;
  std::string point;
};

// Input problems found while interpreting arguments or files: exit code 2.
struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <class Fn>
auto interpret(const std::string& what, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(what + ": " + e.what());
  }
}

GroupId group_arg(const std::string& s) {
  return interpret("--group", [&] { return parse_group_id(s); });
}

std::string matrix_row(const NumMatrix& m, std::size_t i) {
  std::string out = "[";
  for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + to_string(m[i][j]);
  return out + "]";
}

// ---- subcommands ----

std::vector<CheckRecord> cmd_verify(const Options& o) {
  std::vector<GroupId> groups;
  if (o.all || o.group == "all") {
    groups = all_groups();
  } else if (!o.group.empty()) {
    groups.push_back(group_arg(o.group));
  } else {
    throw UsageError("verify needs --group G or --all");
  }
  if (o.check != "all" && o.check != "closure" && o.check != "inverse" && o.check != "assoc" && o.check != "identity")
    throw UsageError("--check: unknown check '" + o.check + "'");
  std::vector<std::vector<CheckRecord>> slots(groups.size());
  parallel_for(groups.size(), [&](std::size_t k) { slots[k] = verify_group(group_template(groups[k]), o.check); });
  std::vector<CheckRecord> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

std::vector<CheckRecord> cmd_lie(const Options& o) {
  const GroupTemplate& t = group_template(group_arg(o.group));
  const LieBasis basis = lie_algebra_basis(t);
  const std::size_t dim = lie_dimension(basis.matrices);
  std::vector<CheckRecord> out;
  CheckRecord d{t.name(), "lie dimension", dim == static_cast<std::size_t>(t.expected_real_dim) ? Status::Pass : Status::Fail,
                std::nullopt, {"dimension " + std::to_string(dim), "expected " + std::to_string(t.expected_real_dim)}};
  out.push_back(std::move(d));
  const bool closed = verify_lie_closure(basis.matrices);
  out.push_back({t.name(), "lie closure", closed ? Status::Pass : Status::Fail, std::nullopt,
                 {closed ? "every commutator lies in the span" : "a commutator leaves the span"}});
  if (o.show_basis) {
    CheckRecord b{t.name(), "lie basis", Status::Pass, std::nullopt, {}};
    for (std::size_t k = 0; k < basis.matrices.size(); ++k) {
      std::string rows;
      for (std::size_t i = 0; i < basis.matrices[k].size(); ++i) rows += (i ? " " : "") + matrix_row(basis.matrices[k], i);
      b.details.push_back(basis.labels[k] + ": " + rows);
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<CheckRecord> cmd_derive(const Options& o) {
  const GroupId id = interpret("--class", [&] { return parse_group_id(o.cls); });
  std::optional<ClassPreset> custom;
  if (!o.preset_file.empty()) {
    const std::string text = read_file(o.preset_file);
    for (auto& p : interpret(o.preset_file, [&] { return load_presets_text(text); }))
      if (p.id == id) custom = std::move(p);
    if (!custom) throw UsageError(o.preset_file + ": no preset for class " + to_string(id));
  }
  const ClassPreset& preset = custom ? *custom : builtin_preset(id);

  std::vector<CheckRecord> out;
  CheckRecord m{preset.name(), "derived matrix", Status::Pass, std::nullopt, {}};
  try {
    const TransferResult t = derive_transfer(preset);
    for (std::size_t i = 0; i < t.frame.size(); ++i) {
      std::string row = t.frame[i] + "' = ";
      std::string sum;
      for (std::size_t j = 0; j < t.frame.size(); ++j) {
        const UnitFraction& e = t.matrix(i, j);
        if (e.is_zero()) continue;
        std::string term = t.frame[j];
        if (e != UnitFraction(StarPoly(1)))
          term = (e.numerator().is_single_term() ? e.str() : "(" + e.str() + ")") + "*" + term;
        sum += (sum.empty() ? "" : " + ") + term;
      }
      m.details.push_back(row + (sum.empty() ? "0" : sum));
    }
    for (const auto& d : t.definitions) m.details.push_back(d.name + " := " + d.value.str());
  } catch (const Error& e) {
    m.status = Status::Fail;
    m.details.push_back(e.what());
  }
  out.push_back(std::move(m));
  if (!custom) out.push_back(keystone_check(id));
  if (o.diff_paper)
    for (auto& r : compare_with_paper(preset)) out.push_back(std::move(r));
  return out;
}

GraphedHypersurface load_manifold(const std::string& path) {
  const std::string text = read_file(path);
  return interpret(path, [&] { return load_hypersurface_text(text); });
}

Point point_arg(const std::string& text, Ambient a) {
  const Point q = interpret("--point '" + text + "'", [&] { return parse_point(text); });
  const std::size_t n = real_coordinates(a).size();
  if (q.size() != n && q.size() != n + 1)
    throw UsageError("--point '" + text + "': expected " + std::to_string(n) + " or " + std::to_string(n + 1) +
                     " coordinates for " + to_string(a));
  return q;
}

std::vector<CheckRecord> cmd_classify(const Options& o) {
  const GraphedHypersurface m = load_manifold(o.manifold);
  std::vector<Point> qs;
  for (const auto& p : o.points) qs.push_back(point_arg(p, m.ambient));
  std::mt19937_64 rng(o.seed);
  auto rational = [&] {
    Rational q(std::uniform_int_distribution<int>(-5, 5)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
    q.canonicalize();
    return q;
  };
  for (std::size_t k = 0; k < o.random_points; ++k) {
    Point q;
    for (std::size_t c = 0; c < real_coordinates(m.ambient).size(); ++c) q.push_back(rational());
    qs.push_back(std::move(q));
  }
  if (qs.empty()) throw UsageError("classify needs --point P or --random N");

  std::vector<CheckRecord> out(qs.size());
  parallel_for(qs.size(), [&](std::size_t k) {
    CheckRecord& r = out[k];
    r.subject = o.manifold;
    r.check = "point (" + to_string(qs[k]) + ")";
    try {
      const Classification c = classify_point(m, qs[k]);
      r.details.push_back("verdict " + to_string(c.verdict));
      if (c.levi_det) r.details.push_back("Levi determinant " + to_string(*c.levi_det));
      for (const auto& n : c.notes) r.details.push_back(n);
    } catch (const Error& e) {
      r.status = Status::Fail;
      r.details.push_back(e.what());
    }
  });
  return out;
}

std::vector<CheckRecord> cmd_multiplier(const Options& o) {
  const std::string map_text = read_file(o.map_file);
  const HoloMap h = interpret(o.map_file, [&] { return load_map_text(map_text); });
  const GraphedHypersurface source = load_manifold(o.source);
  const GraphedHypersurface target = load_manifold(o.target);
  if (h.ambient != Ambient::C2 || source.ambient != Ambient::C2 || target.ambient != Ambient::C2)
    throw UsageError("the multiplier is defined for maps between hypersurfaces in C2");
  const Point q = point_arg(o.point, Ambient::C2);

  CheckRecord r{o.map_file, "multiplier at (" + to_string(q) + ")", Status::Pass, std::nullopt, {}};
  try {
    const MultiplierResult m = multiplier_at(h, source, target, q);
    r.details.push_back("a = " + to_string(m.a));
    r.details.push_back("residual = " + to_string(m.residual));
    r.details.push_back("image (z, w) = (" + to_string(m.image[0]) + ", " + to_string(m.image[1]) + ")");
    r.details.push_back(m.image_on_target ? "image lies on the target" : "image is off the target");
    if (!m.residual.is_zero() || !m.image_on_target) r.status = Status::Fail;
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.details.push_back(e.what());
  }
  return {r};
}

// ---- report ----

void emit(const Options& o, const std::vector<std::string>& args, const std::vector<CheckRecord>& records,
          std::ostream& out) {
  std::size_t pass = 0, fail = 0, errata = 0;
  for (const auto& r : records) {
    pass += r.status == Status::Pass;
    fail += r.status == Status::Fail;
    errata += r.status == Status::Erratum;
  }
  if (o.format == "json") {
    nlohmann::json j;
    j["tool"] = "crg";
    j["version"] = kVersion;
    j["invocation"] = args;
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) j["records"].push_back(to_json(r));
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"erratum", errata}};
    out << j.dump(2) << "\n";
    return;
  }
  std::string line = std::string("crg ") + kVersion;
  for (const auto& a : args) line += " " + a;
  out << line << "\n";
  for (const auto& r : records) out << to_text(r) << "\n";
  out << "summary: " << pass << " pass, " << fail << " fail, " << errata << " erratum\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of the CR ambiguity groups", "crg"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_flag("--strict-errata", o.strict_errata, "Count errata as failures");

  auto* verify = app.add_subcommand("verify", "Group law checks: closure, inverse, assoc, identity");
  verify->add_option("--group", o.group, "I, II, III1, III2, IV1, IV2 or all");
  verify->add_flag("--all", o.all, "All six groups");
  verify->add_option("--check", o.check, "closure, inverse, assoc, identity or all");

  auto* lie = app.add_subcommand("lie", "Lie algebra dimension and closure");
  lie->add_option("--group", o.group, "Group")->required();
  lie->add_flag("--show-basis", o.show_basis, "List the basis matrices");

  auto* derive = app.add_subcommand("derive", "Derive the transfer matrix from the bracket table");
  derive->add_option("--class", o.cls, "Class")->required();
  derive->add_flag("--diff-paper", o.diff_paper, "Compare with the printed matrix and coefficients");
  derive->add_option("--preset", o.preset_file, "Preset file instead of the built-in table");

  auto* classify = app.add_subcommand("classify", "Classify points of a graphed hypersurface");
  classify->add_option("--manifold", o.manifold, "Hypersurface file")->required();
  classify->add_option("--point", o.points, "Comma-separated rational coordinates");
  classify->add_option("--random", o.random_points, "Also classify N seeded random points on M");

  auto* multiplier = app.add_subcommand("multiplier", "Evaluate the multiplier a of a map h'");
  multiplier->add_option("--map", o.map_file, "Map file")->required();
  multiplier->add_option("--source", o.source, "Hypersurface M' containing the point")->required();
  multiplier->add_option("--target", o.target, "Hypersurface M")->required();
  multiplier->add_option("--point", o.point, "Point of M'")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  std::vector<CheckRecord> records;
  try {
    if (verify->parsed())
      records = cmd_verify(o);
    else if (lie->parsed())
      records = cmd_lie(o);
    else if (derive->parsed())
      records = cmd_derive(o);
    else if (classify->parsed())
      records = cmd_classify(o);
    else
      records = cmd_multiplier(o);
  } catch (const UsageError& e) {
    err << "crg: " << e.what() << "\n";
    return 2;
  }

  emit(o, args, records, out);
  for (const auto& r : records)
    if (r.status == Status::Fail || (o.strict_errata && r.status == Status::Erratum)) return 1;
  return 0;
}

}  // namespace crg::cli
