#include "cli/category_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tcat/catalog.hpp"
#include "tcat/error.hpp"

namespace tcat::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::Parse, what); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Label label_of(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) parse_fail("unknown label '" + name + "'");
  return static_cast<Label>(it - names.begin());
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Label> labels_of(const std::vector<std::string>& names, const std::string& text, std::size_t expected) {
  std::vector<Label> out;
  for (const std::string& part : split(text, ',')) out.push_back(label_of(names, part));
  if (out.size() != expected) parse_fail("malformed symbol key '" + text + "'");
  return out;
}

FKey parse_f_key(const std::vector<std::string>& names, const std::string& key) {
  const auto parts = split(key, '|');
  if (parts.size() != 3) parse_fail("malformed F key '" + key + "'");
  const auto abc = labels_of(names, parts[0], 3);
  const auto d = labels_of(names, parts[1], 1);
  const auto ef = labels_of(names, parts[2], 2);
  return FKey{abc[0], abc[1], abc[2], d[0], ef[0], ef[1]};
}

RKey parse_r_key(const std::vector<std::string>& names, const std::string& key) {
  const auto parts = split(key, '|');
  if (parts.size() != 2) parse_fail("malformed R key '" + key + "'");
  const auto ab = labels_of(names, parts[0], 2);
  const auto c = labels_of(names, parts[1], 1);
  return RKey{ab[0], ab[1], c[0]};
}

Amplitude invert_unimodular(const Amplitude& a) {
  if (a.exact) return Amplitude(a.exact->inverse());
  return Amplitude(std::conj(a.value));
}

}  // namespace

json amplitude_to_json(const Amplitude& a) {
  if (a.exact) return json{{"phase", {a.exact->num(), a.exact->den()}}};
  return json{{"re", a.value.real()}, {"im", a.value.imag()}};
}

Amplitude amplitude_from_json(const json& j) {
  if (j.is_number()) return Amplitude(Scalar(j.get<double>()));
  if (!j.is_object()) parse_fail("scalar must be a number or an object");
  if (j.contains("phase")) {
    const json& p = j.at("phase");
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      parse_fail("phase must be [num, den] with integers");
    }
    const long den = p[1].get<long>();
    if (den <= 0) parse_fail("phase denominator must be positive");
    return Amplitude(ExactPhase(p[0].get<long>(), den));
  }
  if (!j.contains("re") || !j.contains("im") || !j.at("re").is_number() || !j.at("im").is_number()) {
    parse_fail("scalar object needs numeric 're' and 'im'");
  }
  return Amplitude(Scalar(j.at("re").get<double>(), j.at("im").get<double>()));
}

CategoryFile parse_category(const json& j) {
  try {
    if (!j.is_object()) parse_fail("category file must be a JSON object");
    CategoryFile f;
    f.name = require(j, "name").get<std::string>();
    const auto names = require(j, "labels").get<std::vector<std::string>>();
    if (names.empty()) parse_fail("label list is empty");
    for (const std::string& n : names) {
      if (n.empty() || n.find_first_of(",|") != std::string::npos) parse_fail("label '" + n + "' is empty or contains ',' or '|'");
    }
    const std::size_t n = names.size();

    std::vector<Label> dual(n, -1);
    const json& dj = require(j, "dual");
    if (!dj.is_object()) parse_fail("dual must map labels to labels");
    for (const auto& [a, b] : dj.items()) dual[label_of(names, a)] = label_of(names, b.get<std::string>());
    for (std::size_t a = 0; a < n; ++a) {
      if (dual[a] < 0) parse_fail("label '" + names[a] + "' has no dual");
    }

    std::vector<FusionTriple> triples;
    for (const json& t : require(j, "fusion")) {
      if (!t.is_array() || t.size() != 4 || !t[3].is_number_integer()) parse_fail("fusion entries are [a, b, c, multiplicity]");
      triples.push_back({label_of(names, t[0].get<std::string>()), label_of(names, t[1].get<std::string>()),
                         label_of(names, t[2].get<std::string>()), t[3].get<int>()});
    }
    try {
      f.ring = FusionRing(names, dual, triples);
    } catch (const Error& e) {
      parse_fail(e.what());
    }

    if (j.contains("dims")) {
      std::vector<double> dims(n, 0.0);
      std::vector<bool> seen(n, false);
      for (const auto& [a, v] : j.at("dims").items()) {
        const Label l = label_of(names, a);
        dims[l] = v.get<double>();
        seen[l] = true;
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) parse_fail("dims must list every label");
      f.dims = dims;
    }

    f.twists.assign(n, Amplitude());
    std::vector<bool> has_twist(n, false);
    for (const auto& [a, v] : require(j, "twists").items()) {
      const Label l = label_of(names, a);
      f.twists[l] = amplitude_from_json(v);
      has_twist[l] = true;
    }
    if (std::find(has_twist.begin(), has_twist.end(), false) != has_twist.end()) parse_fail("twists must list every label");

    if (j.contains("ymatrix")) {
      const json& y = j.at("ymatrix");
      if (!y.is_array() || y.size() != n) parse_fail("ymatrix must be a square array over the labels");
      Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (std::size_t a = 0; a < n; ++a) {
        if (!y[a].is_array() || y[a].size() != n) parse_fail("ymatrix must be a square array over the labels");
        for (std::size_t b = 0; b < n; ++b) m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = amplitude_from_json(y[a][b]).value;
      }
      f.ymatrix = m;
    }

    if (j.contains("conventions")) {
      const json& c = j.at("conventions");
      const std::string hex = c.value("hexagon", std::string("left"));
      if (hex != "left" && hex != "right") parse_fail("conventions.hexagon must be 'left' or 'right'");
      f.conventions.hexagon_right = hex == "right";
      f.conventions.trivial_f_default = c.value("trivial_F_default", true);
    }

    if (j.contains("F") && !j.contains("R")) parse_fail("F-symbols given without R-symbols");
    if (j.contains("R")) {
      f.has_skeletal = true;
      for (const auto& [k, v] : j.at("R").items()) {
        const Amplitude a = amplitude_from_json(v);
        f.r_symbols[parse_r_key(names, k)] = f.conventions.hexagon_right ? invert_unimodular(a) : a;
      }
      if (j.contains("F")) {
        for (const auto& [k, v] : j.at("F").items()) f.f_symbols[parse_f_key(names, k)] = amplitude_from_json(v);
      }
    }

    if (j.contains("beta")) {
      for (const auto& [rep, block] : j.at("beta").items()) {
        SuppliedBeta sb;
        for (const json& e : require(block, "elements")) sb.elements.push_back(label_of(names, e.get<std::string>()));
        const json& vals = require(block, "values");
        if (!vals.is_array() || vals.size() != sb.elements.size()) parse_fail("beta values must be square over its elements");
        for (const json& row : vals) {
          if (!row.is_array() || row.size() != sb.elements.size()) parse_fail("beta values must be square over its elements");
          std::vector<Amplitude> r;
          for (const json& x : row) r.push_back(amplitude_from_json(x));
          sb.values.push_back(std::move(r));
        }
        f.beta[label_of(names, rep)] = std::move(sb);
      }
    }
    return f;
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed category file: ") + e.what());
  }
}

CategoryFile read_category_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    parse_fail("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_category(j);
}

Category assemble(const CategoryFile& file, Tolerance tol) {
  Category cat;
  cat.name = file.name;
  cat.data = make_premodular(file.ring, file.twists, file.dims, file.ymatrix, tol);
  if (file.has_skeletal) cat.skeletal = SkeletalData(file.ring, file.f_symbols, file.r_symbols, file.conventions.trivial_f_default);
  cat.supplied_beta = file.beta;
  cat.conventions = file.conventions;
  return cat;
}

json category_to_json(const Category& cat) {
  const FusionRing& ring = cat.data.ring;
  json j;
  j["name"] = cat.name;
  j["labels"] = ring.names();
  json dual = json::object();
  json dims = json::object();
  json twists = json::object();
  for (Label a = 0; a < ring.rank(); ++a) {
    dual[ring.name(a)] = ring.name(ring.dual(a));
    dims[ring.name(a)] = cat.data.dim(a);
    twists[ring.name(a)] = amplitude_to_json(cat.data.twists[static_cast<std::size_t>(a)]);
  }
  j["dual"] = dual;
  j["dims"] = dims;
  j["twists"] = twists;
  json fusion = json::array();
  for (const FusionTriple& t : ring.triples()) fusion.push_back({ring.name(t.a), ring.name(t.b), ring.name(t.c), t.multiplicity});
  j["fusion"] = fusion;
  if (cat.data.ymatrix) {
    json y = json::array();
    for (Eigen::Index a = 0; a < cat.data.ymatrix->rows(); ++a) {
      json row = json::array();
      for (Eigen::Index b = 0; b < cat.data.ymatrix->cols(); ++b) row.push_back(amplitude_to_json(Amplitude((*cat.data.ymatrix)(a, b))));
      y.push_back(row);
    }
    j["ymatrix"] = y;
  }
  bool trivial_default = cat.conventions.trivial_f_default;
  if (cat.skeletal) {
    trivial_default = cat.skeletal->trivial_f_default();
    json f = json::object();
    for (const auto& [k, v] : cat.skeletal->f_symbols()) {
      f[ring.name(k.a) + "," + ring.name(k.b) + "," + ring.name(k.c) + "|" + ring.name(k.d) + "|" + ring.name(k.e) + "," +
        ring.name(k.f)] = amplitude_to_json(v);
    }
    json r = json::object();
    for (const auto& [k, v] : cat.skeletal->r_symbols()) {
      r[ring.name(k.a) + "," + ring.name(k.b) + "|" + ring.name(k.c)] =
          amplitude_to_json(cat.conventions.hexagon_right ? invert_unimodular(v) : v);
    }
    j["F"] = f;
    j["R"] = r;
  }
  if (!cat.supplied_beta.empty()) {
    json beta = json::object();
    for (const auto& [rep, sb] : cat.supplied_beta) {
      json elems = json::array();
      for (Label e : sb.elements) elems.push_back(ring.name(e));
      json vals = json::array();
      for (const auto& row : sb.values) {
        json r = json::array();
        for (const Amplitude& a : row) r.push_back(amplitude_to_json(a));
        vals.push_back(r);
      }
      beta[ring.name(rep)] = json{{"elements", elems}, {"values", vals}};
    }
    j["beta"] = beta;
  }
  j["conventions"] = json{{"hexagon", cat.conventions.hexagon_right ? "right" : "left"}, {"trivial_F_default", trivial_default}};
  return j;
}

std::string export_category(const Category& cat) { return category_to_json(cat).dump(2) + "\n"; }

Category load_category(const std::string& source, Tolerance tol) {
  if (!std::filesystem::exists(source)) {
    const auto names = catalog_names();
    if (std::find(names.begin(), names.end(), source) != names.end() || source.rfind("repZ", 0) == 0) {
      try {
        return catalog_get(source);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidArgument) parse_fail(e.what());
        throw;
      }
    }
  }
  const CategoryFile file = read_category_file(source);
  const RingReport report = validate_ring(file.ring);
  if (!report.ok()) {
    const RingIssue& issue = report.failures.front();
    fail(ErrorKind::Inconsistent, "fusion ring fails " + issue.axiom + " at " + file.ring.describe(issue.witness) + ": " + issue.detail);
  }
  return assemble(file, tol);
}

}  // namespace tcat::cli
