#include "cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cli/category_io.hpp"
#include "cli/report_io.hpp"
#include "tcat/catalog.hpp"
#include "tcat/closure.hpp"

namespace tcat::cli {

using nlohmann::json;

namespace {

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

void check_format(const Options& opt) {
  if (opt.format != "table" && opt.format != "json") fail(ErrorKind::Parse, "--format must be 'table' or 'json'");
}

std::vector<Label> parse_label_list(const FusionRing& ring, const std::string& text) {
  std::vector<Label> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = ring.find(item);
    if (!a) fail(ErrorKind::Parse, "unknown label '" + item + "' in --transparent");
    out.push_back(*a);
  }
  return out;
}

/// Explicit labels, or the invertible part of the bosonic center.
std::vector<Label> galois_subcategory(const Category& cat, const Options& opt) {
  if (opt.transparent != "auto") return parse_label_list(cat.data.ring, opt.transparent);
  const FusionRing& ring = cat.data.ring;
  std::vector<Label> out;
  for (Label a : split_center(cat.data, opt.tol).bosons) {
    if (ring.simple_product(a, ring.dual(a)) == std::optional<Label>(0)) out.push_back(a);
  }
  return out;
}

struct Checklist {
  std::ostream& out;
  bool ok = true;

  void line(bool pass, const std::string& what, const std::string& detail = "") {
    ok = ok && pass;
    out << (pass ? "PASS " : "FAIL ") << what;
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
  }
};

std::string worst(const CoherenceReport& r) {
  std::ostringstream os;
  os << r.equations << " equations, worst defect " << r.worst;
  if (!r.ok) os << " at " << r.worst_at;
  return os.str();
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::OutOfScope:
      return 3;
    default:
      return 1;
  }
}

Tolerance resolve_tolerance(std::optional<double> flag, const char* env_value) {
  double eps = Tolerance{}.eps;
  if (flag) {
    eps = *flag;
  } else if (env_value && *env_value) {
    try {
      std::size_t used = 0;
      eps = std::stod(env_value, &used);
      if (used != std::string(env_value).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, std::string("TCAT_TOLERANCE is not a number: '") + env_value + "'");
    }
  }
  if (!(eps > 0)) fail(ErrorKind::Parse, "tolerance must be positive");
  return Tolerance(eps);
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CategoryFile file = [&] {
      std::filesystem::path p(opt.input);
      if (!std::filesystem::exists(p)) {
        const auto names = catalog_names();
        if (std::find(names.begin(), names.end(), opt.input) != names.end() || opt.input.rfind("repZ", 0) == 0) {
          return parse_category(category_to_json(load_category(opt.input)));
        }
      }
      return read_category_file(opt.input);
    }();
    Checklist check{out};
    const FusionRing& ring = file.ring;

    const RingReport rr = validate_ring(ring);
    for (const RingIssue& issue : rr.failures) check.line(false, "ring " + issue.axiom + " at " + ring.describe(issue.witness), issue.detail);
    if (!rr.ok()) {
      out << "invalid\n";
      return 1;
    }
    check.line(true, "fusion ring axioms");

    PremodularData data;
    try {
      data = make_premodular(ring, file.twists, file.dims, file.ymatrix, opt.tol);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) throw;
      check.line(false, "premodular data", e.what());
      out << "invalid\n";
      return 1;
    }
    const auto issues = validate_premodular(data, opt.tol);
    for (const PremodularIssue& i : issues) check.line(false, "premodular " + i.check, i.detail);
    if (issues.empty()) check.line(true, "dimensions, twists and Y-matrix");
    try {
      center_closure_check(data, transparent_simples(data, opt.tol));
      check.line(true, "transparent set closed under fusion and duals");
      fermion_fixpoint_diagnostic(data, opt.tol);
      check.line(true, "transparent fermions act without fixpoints");
    } catch (const Error& e) {
      check.line(false, "symmetric center", e.what());
    }

    if (file.has_skeletal) {
      try {
        const SkeletalData sk(ring, file.f_symbols, file.r_symbols, file.conventions.trivial_f_default);
        const CoherenceReport norm = check_normalization(sk, opt.tol);
        check.line(norm.ok, "F normalisation and unitarity", worst(norm));
        const CoherenceReport pent = check_pentagon(sk, opt.tol);
        check.line(pent.ok, "pentagon", worst(pent));
        const CoherenceReport hex = check_hexagon(sk, opt.tol);
        check.line(hex.ok, "hexagon", worst(hex));
        if (hex.ok && issues.empty()) {
          const auto theta = twist_from_R(sk, data.dims);
          double dev = 0;
          for (Label a = 0; a < ring.rank(); ++a) dev = std::max(dev, std::abs(theta[a] - data.twist(a)));
          check.line(dev <= opt.tol.eps, "twists from R-symbols", "max deviation " + std::to_string(dev));
          const double ydev = max_abs(ymatrix_from_R(sk, data.dims) - effective_ymatrix(data, opt.tol));
          check.line(ydev <= opt.tol.eps, "Y-matrix from R-symbols", "max deviation " + std::to_string(ydev));
          std::vector<Label> skeletal_center;
          for (Label a = 0; a < ring.rank(); ++a) {
            bool all = true;
            for (Label b = 0; b < ring.rank(); ++b) all = all && monodromy_trivial(sk, a, b, opt.tol);
            if (all) skeletal_center.push_back(a);
          }
          check.line(skeletal_center == transparent_simples(data, opt.tol), "Y-based and R-based transparent sets agree");
        }
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw;
        check.line(false, "skeletal data", e.what());
      }
    }
    out << (check.ok ? "valid\n" : "invalid\n");
    return check.ok ? 0 : 1;
  });
}

int cmd_center(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_format(opt);
    const Category cat = load_category(opt.input, opt.tol);
    const FusionRing& ring = cat.data.ring;
    const std::vector<Label> center = transparent_simples(cat.data, opt.tol);
    center_closure_check(cat.data, center);
    const CenterSplit split = split_center(cat.data, opt.tol);
    const FixpointReport fix = fermion_fixpoint_diagnostic(cat.data, opt.tol);
    const ModularityCertificate cert = is_modular(cat.data, opt.tol);
    std::optional<ModularRepresentation> st;
    if (cert.modular) st = st_and_sl2z(cat.data, opt.tol);

    if (opt.format == "json") {
      auto names = [&](const std::vector<Label>& xs) {
        json a = json::array();
        for (Label x : xs) a.push_back(ring.name(x));
        return a;
      };
      json j{{"category", cat.name},
             {"transparent", names(center)},
             {"bosons", names(split.bosons)},
             {"fermions", names(split.fermions)},
             {"modular", cert.modular},
             {"y_rank", cert.y_rank},
             {"fermion_fixpoints_checked", names(fix.fermions_checked)}};
      if (st) {
        j["sl2z"] = json{{"unitarity_defect", st->unitarity_defect},
                         {"charge_conjugation_defect", st->charge_conjugation_defect},
                         {"s4_defect", st->s4_defect},
                         {"st3_defect", st->st3_defect}};
      }
      out << j.dump(2) << "\n";
    } else {
      out << "category: " << cat.name << "\n";
      out << "transparent: " << ring.describe(center) << "\n";
      out << "bosons: " << ring.describe(split.bosons) << "\n";
      out << "fermions: " << ring.describe(split.fermions) << "\n";
      out << "fermion fixpoint check: " << (fix.vacuous ? "vacuous" : "no fixpoints") << "\n";
      out << "modular: " << (cert.modular ? "yes" : "no") << " (rank Y = " << cert.y_rank << " of " << ring.rank() << ")\n";
      if (st) {
        out << "SL(2,Z) defects: |SS*-1| " << st->unitarity_defect << ", |S^2-C| " << st->charge_conjugation_defect
            << ", |S^4-1| " << st->s4_defect << ", |(ST)^3-S^2| " << st->st3_defect << "\n";
      }
    }
    return (st && !st->ok(opt.tol)) ? 1 : 0;
  });
}

int cmd_close(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_format(opt);
    const Category cat = load_category(opt.input, opt.tol);
    const ClosureReport report = opt.transparent == "auto"
                                     ? close_auto(cat, opt.tol)
                                     : close(cat, parse_label_list(cat.data.ring, opt.transparent), opt.tol);
    if (opt.format == "json") {
      out << closure_to_json(report).dump(2) << "\n";
    } else {
      out << render_closure(report);
    }
    return 0;
  });
}

int cmd_galois(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_format(opt);
    const Category cat = load_category(opt.input, opt.tol);
    const auto entries = galois_lattice(cat, galois_subcategory(cat, opt), opt.tol);
    if (opt.format == "json") {
      out << lattice_to_json(entries, cat.data.ring.names()).dump(2) << "\n";
    } else {
      out << render_lattice(entries, cat.data.ring.names());
    }
    return 0;
  });
}

int cmd_catalog_list(std::ostream& out) {
  for (const std::string& name : catalog_names()) out << name << "\n";
  return 0;
}

int cmd_catalog_export(const std::string& name, const std::string& output_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string text = [&] {
      try {
        return export_category(catalog_get(name));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidArgument) fail(ErrorKind::Parse, e.what());
        throw;
      }
    }();
    if (output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(output_path);
      if (!file) fail(ErrorKind::Parse, "cannot write '" + output_path + "'");
      file << text;
    }
    return 0;
  });
}

}  // namespace tcat::cli
